#include "minksurf/surface.hpp"

#include <cmath>

#include "minksurf/detail/numdiff.hpp"
#include "minksurf/errors.hpp"

namespace minksurf {

namespace {

void check_domain(const SurfaceChart& chart, double q1, double q2) {
  if (!(q1 >= chart.q1_min && q1 <= chart.q1_max && q2 >= chart.q2_min && q2 <= chart.q2_max))
    throw OutOfDomainError("(q1,q2)=(" + std::to_string(q1) + "," + std::to_string(q2) + ")");
}

struct Partials {
  MinkVector r1, r2;
};

Partials first_partials(const SurfaceChart& chart, double q1, double q2) {
  if (chart.has_first_partials()) return {chart.d1(q1, q2), chart.d2(q1, q2)};
  const double h1 = detail::fd_step(q1), h2 = detail::fd_step(q2);
  auto f1 = [&](double t) { return chart.position(t, q2); };
  auto f2 = [&](double t) { return chart.position(q1, t); };
  return {detail::richardson1(f1, q1, h1), detail::richardson1(f2, q2, h2)};
}

struct SecondPartials {
  MinkVector r11, r12, r22;
};

SecondPartials second_partials(const SurfaceChart& chart, double q1, double q2) {
  if (chart.has_second_partials())
    return {chart.d11(q1, q2), chart.d12(q1, q2), chart.d22(q1, q2)};
  const double h1 = detail::fd_step(q1), h2 = detail::fd_step(q2);
  auto f1 = [&](double t) { return chart.position(t, q2); };
  auto f2 = [&](double t) { return chart.position(q1, t); };
  auto f = [&](double a, double b) { return chart.position(a, b); };
  return {detail::richardson2(f1, q1, h1),
          detail::richardson_cross(f, q1, q2, h1, h2),
          detail::richardson2(f2, q2, h2)};
}

double metric_scale(const SymMat2& g) {
  return std::max({std::abs(g.m11), std::abs(g.m12), std::abs(g.m22)});
}

SymMat2 metric_of(const Partials& p) {
  return {lorentz_inner(p.r1, p.r1), lorentz_inner(p.r1, p.r2), lorentz_inner(p.r2, p.r2)};
}

// Shared tail of unit_normal/shape_data: g must be non-degenerate here.
UnitNormal normal_from(const Partials& p, const SymMat2& g) {
  const double detg = g.det();
  const MinkVector c = lorentz_cross(p.r1, p.r2);
  const double inv = 1.0 / std::sqrt(std::abs(detg));
  // <c,c>_1 = -det g, so eps = -sign(det g).
  return {inv * c, detg > 0.0 ? -1 : +1};
}

}  // namespace

SymMat2 first_fundamental_form(const SurfaceChart& chart, double q1, double q2) {
  check_domain(chart, q1, q2);
  const SymMat2 g = metric_of(first_partials(chart, q1, q2));
  const double s = metric_scale(g);
  if (s == 0.0 || std::abs(g.det()) < kCausalTol * s * s)
    throw DegenerateMetricError("|det g| below tolerance");
  return g;
}

UnitNormal unit_normal(const SurfaceChart& chart, double q1, double q2) {
  check_domain(chart, q1, q2);
  const Partials p = first_partials(chart, q1, q2);
  const SymMat2 g = metric_of(p);
  const double s = metric_scale(g);
  if (s == 0.0 || std::abs(g.det()) < kCausalTol * s * s)
    throw LightLikePointError("<N,N>_1 vanishes (degenerate induced metric)");
  return normal_from(p, g);
}

FundamentalForms fundamental_forms(const SurfaceChart& chart, double q1, double q2) {
  check_domain(chart, q1, q2);
  const Partials p = first_partials(chart, q1, q2);
  const SymMat2 g = metric_of(p);
  const double s = metric_scale(g);
  if (s == 0.0 || std::abs(g.det()) < kCausalTol * s * s)
    throw LightLikePointError("<N,N>_1 vanishes (degenerate induced metric)");
  const UnitNormal n = normal_from(p, g);
  const SecondPartials sp = second_partials(chart, q1, q2);
  FundamentalForms out;
  out.g = g;
  out.h = {lorentz_inner(n.N, sp.r11), lorentz_inner(n.N, sp.r12), lorentz_inner(n.N, sp.r22)};
  out.detg = g.det();
  out.eps = n.eps;
  return out;
}

ShapeData shape_data(const SurfaceChart& chart, double q1, double q2) {
  const FundamentalForms ff = fundamental_forms(chart, q1, q2);
  // [a] = -[h][g]^-1: the matrix of dN in the coordinate basis (Weingarten
  // coefficients of dN/dq_i = sum_j a_ij dr/dq_j).
  const double inv = 1.0 / ff.detg;
  const double gi11 = ff.g.m22 * inv, gi12 = -ff.g.m12 * inv, gi22 = ff.g.m11 * inv;
  ShapeData out;
  out.a11 = -(ff.h.m11 * gi11 + ff.h.m12 * gi12);
  out.a12 = -(ff.h.m11 * gi12 + ff.h.m12 * gi22);
  out.a21 = -(ff.h.m12 * gi11 + ff.h.m22 * gi12);
  out.a22 = -(ff.h.m12 * gi12 + ff.h.m22 * gi22);
  out.eps = ff.eps;
  out.H = 0.5 * ff.eps * (out.a11 + out.a22);
  out.K = ff.eps * (out.a11 * out.a22 - out.a12 * out.a21);
  // Real eigenvalues of a iff the discriminant H^2 - eps K is nonnegative.
  out.diagonalizable = (out.H * out.H - ff.eps * out.K) >= -kCausalTol;
  return out;
}

double geometric_potential(const SurfaceChart& chart, double q1, double q2) {
  const ShapeData sd = shape_data(chart, q1, q2);
  return -(sd.eps * sd.H * sd.H - sd.K);
}

TubularMetric tubular_metric(const SurfaceChart& chart, double q1, double q2, double q3) {
  const FundamentalForms ff = fundamental_forms(chart, q1, q2);
  const ShapeData sd = shape_data(chart, q1, q2);
  const double tra = sd.a11 + sd.a22;
  const double deta = sd.a11 * sd.a22 - sd.a12 * sd.a21;
  const double f = ff.eps * (1.0 + q3 * tra + q3 * q3 * deta);
  if (std::abs(f) < kCausalTol) throw FocalPointError("volume factor f vanishes");

  // G_ij = sum_kl (delta_ik + q3 a_ik)(delta_jl + q3 a_jl) g_kl
  const double b11 = 1.0 + q3 * sd.a11, b12 = q3 * sd.a12;
  const double b21 = q3 * sd.a21, b22 = 1.0 + q3 * sd.a22;
  auto gq = [&](double pi1, double pi2, double pj1, double pj2) {
    return pi1 * pj1 * ff.g.m11 + (pi1 * pj2 + pi2 * pj1) * ff.g.m12 + pi2 * pj2 * ff.g.m22;
  };
  TubularMetric out;
  out.G11 = gq(b11, b12, b11, b12);
  out.G12 = gq(b11, b12, b21, b22);
  out.G22 = gq(b21, b22, b21, b22);
  out.G33 = ff.eps;
  out.f = f;
  return out;
}

}  // namespace minksurf
