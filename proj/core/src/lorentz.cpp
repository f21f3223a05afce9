#include "minksurf/lorentz.hpp"

#include <cmath>
#include <stdexcept>

namespace minksurf {

bool MinkVector::finite() const {
  return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
}

double MinkVector::max_abs() const {
  return std::max({std::abs(x1), std::abs(x2), std::abs(x3)});
}

double lorentz_inner(const MinkVector& a, const MinkVector& b) {
  return -a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

MinkVector lorentz_cross(const MinkVector& a, const MinkVector& b) {
  return {-(a.x2 * b.x3 - a.x3 * b.x2),
          -(a.x1 * b.x3 - a.x3 * b.x1),
          a.x1 * b.x2 - a.x2 * b.x1};
}

CausalClass classify_vector(const MinkVector& v) {
  if (!v.finite()) throw std::invalid_argument("classify_vector: non-finite components");
  const double s = v.max_abs();
  if (s == 0.0) return CausalClass::SpaceLike;  // <v,v>_1 > 0 or v = 0
  const MinkVector n{v.x1 / s, v.x2 / s, v.x3 / s};
  const double q = lorentz_inner(n, n);
  if (std::abs(q) < kCausalTol) return CausalClass::LightLike;
  return q > 0.0 ? CausalClass::SpaceLike : CausalClass::TimeLike;
}

Signature2 classify_signature(const Mat2& g) {
  if (!(std::isfinite(g.m11) && std::isfinite(g.m12) && std::isfinite(g.m21) &&
        std::isfinite(g.m22)))
    throw std::invalid_argument("classify_signature: non-finite entries");
  const double scale =
      std::max({std::abs(g.m11), std::abs(g.m12), std::abs(g.m21), std::abs(g.m22)});
  if (std::abs(g.m12 - g.m21) > kCausalTol * std::max(scale, 1.0))
    throw std::invalid_argument("classify_signature: non-symmetric input");

  int s1 = 0, s2 = 0;
  if (scale > 0.0) {
    // Eigenvalues of [[m11,m12],[m12,m22]] on the normalized matrix.
    const double a = g.m11 / scale, b = g.m12 / scale, c = g.m22 / scale;
    const double mean = 0.5 * (a + c);
    const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    const double lo = mean - disc, hi = mean + disc;
    auto sgn = [](double x) { return std::abs(x) < kCausalTol ? 0 : (x > 0.0 ? 1 : -1); };
    s1 = sgn(lo);
    s2 = sgn(hi);
  }

  Signature2 out{s1, s2, SurfaceClass::Riemannian};
  if (s1 > 0 && s2 > 0) {
    out.label = SurfaceClass::Riemannian;
  } else if (s1 < 0 && s2 > 0) {
    out.label = SurfaceClass::Lorentzian;
  } else if (s1 == 0 && s2 > 0) {
    out.label = SurfaceClass::Degenerate;
  } else {
    // Index of diag(-1,1,1) is 1, so no surface in R^3_1 induces (-,-),
    // (-,0), (0,0) or an all-zero metric.
    throw std::invalid_argument("classify_signature: signature not realizable by a surface in R^3_1");
  }
  return out;
}

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::SpaceLike: return "space-like";
    case CausalClass::TimeLike: return "time-like";
    case CausalClass::LightLike: return "light-like";
  }
  return "?";
}

const char* to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Riemannian: return "space-like";
    case SurfaceClass::Lorentzian: return "time-like";
    case SurfaceClass::Degenerate: return "light-like";
  }
  return "?";
}

}  // namespace minksurf
