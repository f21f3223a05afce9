#include "minksurf/revolution.hpp"

#include <cmath>
#include <stdexcept>

#include "minksurf/errors.hpp"

namespace minksurf {

namespace {

bool timelike_axis(FamilyTag tag) {
  return tag == FamilyTag::TimelikeAxisTimelikeCurve ||
         tag == FamilyTag::TimelikeAxisSpacelikeCurve;
}

bool spacelike_plane(FamilyTag tag) { return tag == FamilyTag::SpacelikeAxisSpacelikePlane; }

int required_eta(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve: return -1;
    case FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve: return +1;
    case FamilyTag::SpacelikeAxisSpacelikePlane: return +1;
    case FamilyTag::TimelikeAxisTimelikeCurve: return -1;
    case FamilyTag::TimelikeAxisSpacelikeCurve: return +1;
  }
  throw std::logic_error("bad FamilyTag");
}

// Arc-length residual: (v')^2 - (u')^2 - eta on a time-like plane,
// (u')^2 + (v')^2 - 1 on the space-like plane.
double arc_residual(FamilyTag tag, const ProfileCurve& p, double q2) {
  const double du = p.du(q2), dv = p.dv(q2);
  if (spacelike_plane(tag)) return du * du + dv * dv - 1.0;
  return dv * dv - du * du - static_cast<double>(p.eta);
}

void check_profile(FamilyTag tag, const ProfileCurve& p) {
  const double lo = std::max(p.q2_min, -30.0);
  const double hi = std::min(p.q2_max, 30.0);
  const double margin = 1e-3 * (hi - lo);
  const int samples = 64;
  for (int i = 0; i < samples; ++i) {
    const double q2 = lo + margin + (hi - lo - 2 * margin) * i / (samples - 1);
    const double du = p.du(q2), dv = p.dv(q2);
    // tolerance in units of the squared speed, so hyperbolic profiles do not
    // trip over cancellation at large |q2|
    const double scale = std::max(1.0, du * du + dv * dv);
    if (std::abs(arc_residual(tag, p, q2)) > 1e-8 * scale)
      throw ArcLengthViolationError("profile not arc-length parametrized at q2=" +
                                    std::to_string(q2));
    // the rotated coordinate must stay positive on the declared domain
    const double radial = timelike_axis(tag) ? p.v(q2) : p.u(q2);
    if (!(radial > 0.0))
      throw std::invalid_argument("build_family: profile radial coordinate not positive at q2=" +
                                  std::to_string(q2));
  }
}

double radial_or_throw(const RevolutionFamily& fam, double q2) {
  // the rotated coordinate (u or v) must stay positive away from the axis
  const double r = fam.radial_coord(q2);
  if (r < 1e-14)
    throw DivisionByZeroError("profile meets the axis at q2=" + std::to_string(q2));
  return r;
}

}  // namespace

SurfaceChart RevolutionFamily::chart(bool analytic) const {
  SurfaceChart c;
  c.q1_min = -HUGE_VAL;
  c.q1_max = HUGE_VAL;
  c.q2_min = profile.q2_min;
  c.q2_max = profile.q2_max;
  const ProfileCurve p = profile;  // captured by value, shared callbacks

  switch (tag) {
    case FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve:
    case FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve:
      // hyperbolic rotation of (u,0,v) about the space-like x3 axis
      c.position = [p](double q1, double q2) -> MinkVector {
        return {p.u(q2) * std::cosh(q1), p.u(q2) * std::sinh(q1), p.v(q2)};
      };
      if (analytic) {
        c.d1 = [p](double q1, double q2) -> MinkVector {
          return {p.u(q2) * std::sinh(q1), p.u(q2) * std::cosh(q1), 0.0};
        };
        c.d2 = [p](double q1, double q2) -> MinkVector {
          return {p.du(q2) * std::cosh(q1), p.du(q2) * std::sinh(q1), p.dv(q2)};
        };
        c.d11 = [p](double q1, double q2) -> MinkVector {
          return {p.u(q2) * std::cosh(q1), p.u(q2) * std::sinh(q1), 0.0};
        };
        c.d12 = [p](double q1, double q2) -> MinkVector {
          return {p.du(q2) * std::sinh(q1), p.du(q2) * std::cosh(q1), 0.0};
        };
        c.d22 = [p](double q1, double q2) -> MinkVector {
          return {p.ddu(q2) * std::cosh(q1), p.ddu(q2) * std::sinh(q1), p.ddv(q2)};
        };
      }
      break;
    case FamilyTag::SpacelikeAxisSpacelikePlane:
      // hyperbolic rotation of (0,u,v)
      c.position = [p](double q1, double q2) -> MinkVector {
        return {p.u(q2) * std::sinh(q1), p.u(q2) * std::cosh(q1), p.v(q2)};
      };
      if (analytic) {
        c.d1 = [p](double q1, double q2) -> MinkVector {
          return {p.u(q2) * std::cosh(q1), p.u(q2) * std::sinh(q1), 0.0};
        };
        c.d2 = [p](double q1, double q2) -> MinkVector {
          return {p.du(q2) * std::sinh(q1), p.du(q2) * std::cosh(q1), p.dv(q2)};
        };
        c.d11 = [p](double q1, double q2) -> MinkVector {
          return {p.u(q2) * std::sinh(q1), p.u(q2) * std::cosh(q1), 0.0};
        };
        c.d12 = [p](double q1, double q2) -> MinkVector {
          return {p.du(q2) * std::cosh(q1), p.du(q2) * std::sinh(q1), 0.0};
        };
        c.d22 = [p](double q1, double q2) -> MinkVector {
          return {p.ddu(q2) * std::sinh(q1), p.ddu(q2) * std::cosh(q1), p.ddv(q2)};
        };
      }
      break;
    case FamilyTag::TimelikeAxisTimelikeCurve:
    case FamilyTag::TimelikeAxisSpacelikeCurve:
      // elliptic rotation of (u,0,v) about the time-like x1 axis
      c.position = [p](double q1, double q2) -> MinkVector {
        return {p.u(q2), p.v(q2) * std::sin(q1), p.v(q2) * std::cos(q1)};
      };
      if (analytic) {
        c.d1 = [p](double q1, double q2) -> MinkVector {
          return {0.0, p.v(q2) * std::cos(q1), -p.v(q2) * std::sin(q1)};
        };
        c.d2 = [p](double q1, double q2) -> MinkVector {
          return {p.du(q2), p.dv(q2) * std::sin(q1), p.dv(q2) * std::cos(q1)};
        };
        c.d11 = [p](double q1, double q2) -> MinkVector {
          return {0.0, -p.v(q2) * std::sin(q1), -p.v(q2) * std::cos(q1)};
        };
        c.d12 = [p](double q1, double q2) -> MinkVector {
          return {0.0, p.dv(q2) * std::cos(q1), -p.dv(q2) * std::sin(q1)};
        };
        c.d22 = [p](double q1, double q2) -> MinkVector {
          return {p.ddu(q2), p.ddv(q2) * std::sin(q1), p.ddv(q2) * std::cos(q1)};
        };
      }
      break;
  }
  return c;
}

double RevolutionFamily::radial_g11(double q2) const {
  const double r = radial_coord(q2);
  if (tag == FamilyTag::SpacelikeAxisSpacelikePlane) return -r * r;
  return r * r;
}

double RevolutionFamily::radial_coord(double q2) const {
  return timelike_axis(tag) ? profile.v(q2) : profile.u(q2);
}

RevolutionFamily build_family(FamilyTag tag, ProfileCurve profile) {
  if (!(profile.u && profile.v && profile.du && profile.dv && profile.ddu && profile.ddv))
    throw std::invalid_argument("build_family: profile callbacks incomplete");
  if (profile.eta != required_eta(tag))
    throw WrongCausalCharacterError("profile eta=" + std::to_string(profile.eta) +
                                    " inconsistent with family tag");
  check_profile(tag, profile);

  RevolutionFamily fam;
  fam.tag = tag;
  fam.profile = std::move(profile);
  fam.periodic_angle = timelike_axis(tag);
  fam.plane = spacelike_plane(tag) ? PlaneClass::SpaceLike : PlaneClass::TimeLike;
  // Space-like plane: the surface is always time-like (eps=+1); otherwise
  // eps = -eta, per Table I.
  fam.eps = spacelike_plane(tag) ? +1 : -fam.profile.eta;
  fam.surface_class = fam.eps == +1 ? SurfaceClass::Lorentzian : SurfaceClass::Riemannian;
  return fam;
}

PrincipalCurvatures closed_form_curvatures(const RevolutionFamily& fam, double q2) {
  const ProfileCurve& p = fam.profile;
  const double r = radial_or_throw(fam, q2);
  const double du = p.du(q2), dv = p.dv(q2), ddu = p.ddu(q2), ddv = p.ddv(q2);
  PrincipalCurvatures k;
  switch (fam.tag) {
    case FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve:
    case FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve:
      k.k1 = -dv / r;
      k.k2 = p.eta * (ddv * du - dv * ddu);
      break;
    case FamilyTag::SpacelikeAxisSpacelikePlane:
      k.k1 = -dv / r;
      k.k2 = dv * ddu - ddv * du;
      break;
    case FamilyTag::TimelikeAxisTimelikeCurve:
    case FamilyTag::TimelikeAxisSpacelikeCurve:
      k.k1 = -du / r;
      k.k2 = p.eta * (ddv * du - dv * ddu);
      break;
  }
  if (p.k2_closed) k.k2 = p.k2_closed(q2);
  return k;
}

double curve_1d_potential(double kappa, PlaneClass plane, int eps_curve) {
  if (!std::isfinite(kappa)) throw std::invalid_argument("curve_1d_potential: kappa not finite");
  if (plane == PlaneClass::SpaceLike) return -0.25 * kappa * kappa;
  return -static_cast<double>(eps_curve) * 0.25 * kappa * kappa;
}

double centripetal_term(const RevolutionFamily& fam, double ell, double q2) {
  const double r = radial_or_throw(fam, q2);
  const double r2 = r * r;
  switch (fam.tag) {
    case FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve:
    case FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve:
      return (ell * ell + 0.25) / r2;
    case FamilyTag::SpacelikeAxisSpacelikePlane:
      // g11 = -u^2: the angular direction is time-like, so larger |ell|
      // lowers the energy (no centrifugal barrier on this family).
      return -(ell * ell + 0.25) / r2;
    case FamilyTag::TimelikeAxisTimelikeCurve:
    case FamilyTag::TimelikeAxisSpacelikeCurve:
      return (ell * ell - 0.25) / r2;
  }
  throw std::logic_error("bad FamilyTag");
}

double curve_term(const RevolutionFamily& fam, double q2) {
  const double k2 = closed_form_curvatures(fam, q2).k2;
  // eps_curve = +1 for a time-like profile curve, i.e. -eta.
  return curve_1d_potential(k2, fam.plane, -fam.profile.eta);
}

EffectiveProblem1D effective_problem(const RevolutionFamily& fam, double ell,
                                     const GridSpec& grid) {
  if (fam.periodic_angle && std::abs(ell - std::round(ell)) > 1e-12)
    throw NonIntegerEllError("ell=" + std::to_string(ell) +
                             " must be an integer for a time-like axis");
  if (grid.n < 64) throw GridTooCoarseError("n=" + std::to_string(grid.n) + " < 64");
  if (!(grid.b > grid.a)) throw std::invalid_argument("effective_problem: empty interval");
  const double slack = 1e-12 * (grid.b - grid.a);
  if (grid.a < fam.profile.q2_min - slack || grid.b > fam.profile.q2_max + slack)
    throw OutOfDomainError("grid walls outside the profile domain");

  EffectiveProblem1D prob;
  prob.a = grid.a;
  prob.b = grid.b;
  prob.h = (grid.b - grid.a) / (grid.n + 1);
  prob.eta = fam.profile.eta;
  prob.ell = ell;
  prob.q.resize(grid.n);
  prob.V.resize(grid.n);
  prob.w.resize(grid.n);
  prob.left_truncates_infinity = std::isinf(fam.profile.q2_min) && grid.a > fam.profile.q2_min;
  prob.right_truncates_infinity = std::isinf(fam.profile.q2_max) && grid.b < fam.profile.q2_max;
  for (int i = 0; i < grid.n; ++i) {
    const double q2 = grid.a + (i + 1) * prob.h;
    prob.q[i] = q2;
    prob.V[i] = centripetal_term(fam, ell, q2) + curve_term(fam, q2);
    prob.w[i] = 1.0 / std::sqrt(radial_or_throw(fam, q2));
    if (!std::isfinite(prob.V[i]))
      throw std::invalid_argument("effective_problem: V_eff not finite at q2=" +
                                  std::to_string(q2));
  }
  return prob;
}

AngularMode angular_mode(const RevolutionFamily& fam, double ell) {
  if (fam.periodic_angle && std::abs(ell - std::round(ell)) > 1e-12)
    throw NonIntegerEllError("ell=" + std::to_string(ell) +
                             " must be an integer for a time-like axis");
  AngularMode mode;
  mode.description = "chi1(q1) = exp(i ell q1)";
  mode.E1 = ell * ell;
  mode.discrete = fam.periodic_angle;  // hyperbolic angle: continuum spectrum
  return mode;
}

}  // namespace minksurf
