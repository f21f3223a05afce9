#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "minksurf/errors.hpp"
#include "minksurf/profiles.hpp"
#include "minksurf/surface.hpp"

using namespace minksurf;

namespace {

SurfaceChart spacelike_plane_chart() {
  SurfaceChart c;
  c.position = [](double q1, double q2) -> MinkVector { return {0.0, q1, q2}; };
  return c;
}

// light-like plane spanned by (0,1,0) and the null direction (1,0,1)
SurfaceChart lightlike_plane_chart() {
  SurfaceChart c;
  c.position = [](double q1, double q2) -> MinkVector { return {q2, q1, q2}; };
  return c;
}

struct Range {
  double lo, hi;
};

// q2 sampling intervals clear of domain singularities
Range sample_range(const std::string& name) {
  if (name == "two_sheeted_hyperboloid") return {0.15, 2.5};
  if (name == "rindler_wedge") return {-0.8, 4.0};
  if (name == "de_sitter_band") return {-1.35, 1.35};
  return {-2.0, 2.0};
}

const char* kFamilies[5] = {"one_sheeted_hyperboloid", "two_sheeted_hyperboloid",
                            "pseudo_cylinder", "rindler_wedge", "de_sitter_band"};

// independent brute-force derivative for oracle checks (plain 2nd order,
// unrelated to the implementation's extrapolated stencils)
MinkVector fd1(const std::function<MinkVector(double)>& f, double t, double d = 1e-6) {
  return (0.5 / d) * (f(t + d) - f(t - d));
}

}  // namespace

TEST_CASE("first fundamental form: flat space-like plane") {
  const SurfaceChart c = spacelike_plane_chart();
  const SymMat2 g = first_fundamental_form(c, 0.3, -1.2);
  CHECK(g.m11 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(g.m12 == doctest::Approx(0.0));
  CHECK(g.m22 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("first fundamental form: one-sheeted hyperboloid is diag(cosh^2 q2, -1)") {
  const RevolutionFamily fam = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  const SurfaceChart c = fam.chart();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uq(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const double q1 = uq(rng), q2 = uq(rng);
    const SymMat2 g = first_fundamental_form(c, q1, q2);
    CHECK(g.m11 == doctest::Approx(std::cosh(q2) * std::cosh(q2)).epsilon(1e-12));
    CHECK(g.m12 == doctest::Approx(0.0));
    CHECK(g.m22 == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("first fundamental form: space-like-plane profile u = q2 + 2") {
  ProfileCurve p;
  p.u = [](double q2) { return q2 + 2.0; };
  p.v = [](double) { return 0.0; };
  p.du = [](double) { return 1.0; };
  p.dv = [](double) { return 0.0; };
  p.ddu = [](double) { return 0.0; };
  p.ddv = [](double) { return 0.0; };
  p.eta = +1;
  p.q2_min = -2.0;
  const RevolutionFamily fam = build_family(FamilyTag::SpacelikeAxisSpacelikePlane, p);
  const SymMat2 g = first_fundamental_form(fam.chart(), 0.7, 0.0);
  CHECK(g.m11 == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(g.m22 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unit normal: plane has time-like normal, hyperboloids as expected") {
  const UnitNormal plane_n = unit_normal(spacelike_plane_chart(), 0.1, 0.4);
  CHECK(plane_n.eps == -1);
  CHECK(std::abs(plane_n.N.x1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(plane_n.N.x2 == doctest::Approx(0.0));
  CHECK(plane_n.N.x3 == doctest::Approx(0.0));

  const RevolutionFamily one = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  CHECK(unit_normal(one.chart(), 0.3, 0.9).eps == +1);  // time-like surface
  const RevolutionFamily two = make_builtin_family("two_sheeted_hyperboloid", 1.0);
  CHECK(unit_normal(two.chart(), 0.3, 0.9).eps == -1);  // space-like surface
}

TEST_CASE("normal is Lorentz-orthogonal to the tangent plane") {
  std::mt19937_64 rng(11);
  for (const char* name : kFamilies) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart c = fam.chart();
    const Range r = sample_range(name);
    std::uniform_real_distribution<double> uq1(-1.5, 1.5), uq2(r.lo, r.hi);
    for (int i = 0; i < 25; ++i) {
      const double q1 = uq1(rng), q2 = uq2(rng);
      const UnitNormal n = unit_normal(c, q1, q2);
      CHECK(std::abs(lorentz_inner(n.N, c.d1(q1, q2))) < 1e-10);
      CHECK(std::abs(lorentz_inner(n.N, c.d2(q1, q2))) < 1e-10);
      CHECK(std::abs(lorentz_inner(n.N, n.N) - n.eps) < 1e-10);
    }
  }
}

TEST_CASE("shape data: constant curvature of the hyperboloids, flat plane") {
  const RevolutionFamily one = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  const RevolutionFamily two = make_builtin_family("two_sheeted_hyperboloid", 1.0);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> uq1(-2.0, 2.0), uq2(0.1, 2.0);
  for (int i = 0; i < 30; ++i) {
    const double q1 = uq1(rng), q2 = uq2(rng);
    CHECK(shape_data(one.chart(), q1, q2).K == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(shape_data(two.chart(), q1, q2).K == doctest::Approx(-1.0).epsilon(1e-10));
  }
  const ShapeData flat = shape_data(spacelike_plane_chart(), 0.2, 0.5);
  CHECK(flat.H == doctest::Approx(0.0));
  CHECK(flat.K == doctest::Approx(0.0));
}

TEST_CASE("Weingarten consistency: dN/dq_i = sum_j a_ij dr/dq_j") {
  std::mt19937_64 rng(17);
  for (const char* name : kFamilies) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart c = fam.chart();
    const Range r = sample_range(name);
    std::uniform_real_distribution<double> uq1(-1.0, 1.0), uq2(r.lo + 0.1, r.hi - 0.1);
    for (int i = 0; i < 10; ++i) {
      const double q1 = uq1(rng), q2 = uq2(rng);
      const ShapeData a = shape_data(c, q1, q2);
      auto n_of = [&](double t1, double t2) { return unit_normal(c, t1, t2).N; };
      const MinkVector dn1 = fd1([&](double t) { return n_of(t, q2); }, q1);
      const MinkVector dn2 = fd1([&](double t) { return n_of(q1, t); }, q2);
      const MinkVector r1 = c.d1(q1, q2), r2 = c.d2(q1, q2);
      const MinkVector rhs1 = a.a11 * r1 + a.a12 * r2;
      const MinkVector rhs2 = a.a21 * r1 + a.a22 * r2;
      CHECK((dn1 - rhs1).max_abs() < 1e-5);
      CHECK((dn2 - rhs2).max_abs() < 1e-5);
    }
  }
}

TEST_CASE("generic finite-difference pipeline agrees with analytic partials") {
  std::mt19937_64 rng(19);
  for (const char* name : kFamilies) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart analytic = fam.chart();
    const SurfaceChart fd = fam.chart(false);
    REQUIRE_FALSE(fd.has_first_partials());
    const Range r = sample_range(name);
    std::uniform_real_distribution<double> uq1(-1.5, 1.5), uq2(r.lo, r.hi);
    for (int i = 0; i < 100; ++i) {
      const double q1 = uq1(rng), q2 = uq2(rng);
      const ShapeData sa = shape_data(analytic, q1, q2);
      const ShapeData sf = shape_data(fd, q1, q2);
      CHECK(std::abs(sa.H - sf.H) < 1e-6);
      CHECK(std::abs(sa.K - sf.K) < 1e-6);
      CHECK(std::abs(sa.a11 - sf.a11) < 1e-6);
      CHECK(std::abs(sa.a22 - sf.a22) < 1e-6);
      const SymMat2 ga = first_fundamental_form(analytic, q1, q2);
      const SymMat2 gf = first_fundamental_form(fd, q1, q2);
      CHECK(std::abs(ga.m11 - gf.m11) < 1e-6);
      CHECK(std::abs(ga.m12 - gf.m12) < 1e-6);
      CHECK(std::abs(ga.m22 - gf.m22) < 1e-6);
    }
  }
}

TEST_CASE("umbilicity: |H^2 - eps K| vanishes on both hyperboloids") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uq1(-2.0, 2.0), uq2(0.1, 2.2);
  for (const char* name : {"one_sheeted_hyperboloid", "two_sheeted_hyperboloid"}) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart c = fam.chart();
    for (int i = 0; i < 100; ++i) {
      const double q1 = uq1(rng), q2 = uq2(rng);
      const ShapeData s = shape_data(c, q1, q2);
      CHECK(std::abs(s.H * s.H - s.eps * s.K) < 1e-10);
    }
  }
}

TEST_CASE("geometric potential: zero on umbilical surfaces, kappa^2/4 on cylinders") {
  const RevolutionFamily one = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  const RevolutionFamily two = make_builtin_family("two_sheeted_hyperboloid", 1.0);
  CHECK(std::abs(geometric_potential(one.chart(), 0.4, -1.1)) < 1e-12);
  CHECK(std::abs(geometric_potential(two.chart(), 0.4, 1.1)) < 1e-12);

  // Euclidean-signature cylinder analog (u = 1, v = q2 about a space-like
  // axis): space-like surface, repulsive V_S = +1/4.
  const RevolutionFamily pc = make_builtin_family("pseudo_cylinder", 1.0);
  CHECK(geometric_potential(pc.chart(), 0.2, 0.8) == doctest::Approx(0.25).epsilon(1e-12));

  // Lorentzian cylinder (space-like plane, u = 1): diagonalizable shape
  // operator on a time-like surface, attractive V_S = -1/4.
  ProfileCurve p;
  p.u = [](double) { return 1.0; };
  p.v = [](double q2) { return q2; };
  p.du = [](double) { return 0.0; };
  p.dv = [](double) { return 1.0; };
  p.ddu = [](double) { return 0.0; };
  p.ddv = [](double) { return 0.0; };
  p.eta = +1;
  const RevolutionFamily lc = build_family(FamilyTag::SpacelikeAxisSpacelikePlane, p);
  CHECK(geometric_potential(lc.chart(), 0.2, 0.8) == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("sign law: space-like surfaces are always repulsive") {
  std::mt19937_64 rng(29);
  for (const char* name : {"two_sheeted_hyperboloid", "pseudo_cylinder"}) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart c = fam.chart();
    REQUIRE(fam.eps == -1);
    const Range r = sample_range(name);
    std::uniform_real_distribution<double> uq1(-1.5, 1.5), uq2(r.lo, r.hi);
    for (int i = 0; i < 100; ++i)
      CHECK(geometric_potential(c, uq1(rng), uq2(rng)) >= -1e-12);
  }
}

TEST_CASE("tubular metric") {
  const RevolutionFamily one = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  const SurfaceChart c = one.chart();

  SUBCASE("q3 = 0 restores the induced metric and f = eps") {
    const SymMat2 g = first_fundamental_form(c, 0.5, 0.7);
    const TubularMetric t = tubular_metric(c, 0.5, 0.7, 0.0);
    CHECK(t.G11 == doctest::Approx(g.m11).epsilon(1e-12));
    CHECK(t.G12 == doctest::Approx(g.m12));
    CHECK(t.G22 == doctest::Approx(g.m22).epsilon(1e-12));
    CHECK(t.G33 == doctest::Approx(1.0));  // eps = +1
    CHECK(t.f == doctest::Approx(1.0));
  }

  SUBCASE("plane: f = eps for any q3") {
    const TubularMetric t = tubular_metric(spacelike_plane_chart(), 0.1, 0.2, 1.7);
    CHECK(t.f == doctest::Approx(-1.0));  // eps = -1, a = 0
    CHECK(t.G33 == doctest::Approx(-1.0));
  }

  SUBCASE("one-sheeted hyperboloid at q3 = 0.1: f = 0.81") {
    // tr a = -2, det a = 1
    const TubularMetric t = tubular_metric(c, 0.3, 0.4, 0.1);
    CHECK(t.f == doctest::Approx(0.81).epsilon(1e-12));
  }

  SUBCASE("focal point is a hard error") {
    // f = (1 - q3)^2 vanishes at the center of curvature q3 = 1
    CHECK_THROWS_AS(tubular_metric(c, 0.3, 0.4, 1.0), FocalPointError);
  }
}

// Independent route for the tubular data: difference the embedding
// R(q1,q2,q3) = r + q3 N directly and compare its induced metric and volume
// element with the closed forms.
TEST_CASE("tubular metric matches finite differences of the embedding") {
  const RevolutionFamily fam = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  const SurfaceChart c = fam.chart();
  auto embed = [&](double q1, double q2, double q3) {
    const UnitNormal n = unit_normal(c, q1, q2);
    return c.position(q1, q2) + q3 * n.N;
  };
  const double q1 = 0.4, q2 = -0.7, q3 = 0.15;
  const MinkVector R1 = fd1([&](double t) { return embed(t, q2, q3); }, q1);
  const MinkVector R2 = fd1([&](double t) { return embed(q1, t, q3); }, q2);
  const MinkVector R3 = fd1([&](double t) { return embed(q1, q2, t); }, q3);
  const TubularMetric tm = tubular_metric(c, q1, q2, q3);

  CHECK(lorentz_inner(R1, R1) == doctest::Approx(tm.G11).epsilon(1e-7));
  CHECK(std::abs(lorentz_inner(R1, R2) - tm.G12) < 1e-7);
  CHECK(lorentz_inner(R2, R2) == doctest::Approx(tm.G22).epsilon(1e-7));
  CHECK(lorentz_inner(R3, R3) == doctest::Approx(tm.G33).epsilon(1e-7));
  CHECK(std::abs(lorentz_inner(R1, R3)) < 1e-7);
  CHECK(std::abs(lorentz_inner(R2, R3)) < 1e-7);

  // volume element: <d1R x d2R, d3R>_1 = f sqrt|det g|
  const double triple = lorentz_inner(lorentz_cross(R1, R2), R3);
  const double detg = first_fundamental_form(c, q1, q2).det();
  CHECK(triple == doctest::Approx(tm.f * std::sqrt(std::abs(detg))).epsilon(1e-7));
}

TEST_CASE("degenerate charts are rejected") {
  const SurfaceChart c = lightlike_plane_chart();
  CHECK_THROWS_AS(first_fundamental_form(c, 0.1, 0.2), DegenerateMetricError);
  CHECK_THROWS_AS(unit_normal(c, 0.1, 0.2), LightLikePointError);
  CHECK_THROWS_AS(shape_data(c, 0.1, 0.2), LightLikePointError);

  SurfaceChart bounded = spacelike_plane_chart();
  bounded.q2_min = -1.0;
  bounded.q2_max = 1.0;
  CHECK_THROWS_AS(first_fundamental_form(bounded, 0.0, 2.0), OutOfDomainError);
}
