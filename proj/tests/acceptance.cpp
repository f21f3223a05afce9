// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minksurf/jobs.hpp"
#include "minksurf/profiles.hpp"
#include "minksurf/spectral.hpp"
#include "minksurf/surface.hpp"

using namespace minksurf;

namespace {

struct Outcome {
  bool pass{true};
  std::string detail;
};

struct Check {
  int id;
  const char* title;
  Outcome (*run)();
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

struct Range {
  double lo, hi;
};

Range sample_range(const std::string& name) {
  if (name == "two_sheeted_hyperboloid") return {0.15, 2.5};
  if (name == "rindler_wedge") return {-0.8, 4.0};
  if (name == "de_sitter_band") return {-1.35, 1.35};
  return {-2.0, 2.0};
}

EffectiveProblem1D hyperboloid_problem(const char* name, double R, double ell, double L,
                                       int n) {
  const RevolutionFamily fam = make_builtin_family(name, R);
  const GridSpec grid{name == std::string("two_sheeted_hyperboloid") ? 0.0 : -L, L, n};
  return effective_problem(fam, ell, grid);
}

// 1. Poschl-Teller reproduction on the one-sheeted hyperboloid (R = 1):
//    exact levels (n-|l|)(n-|l|+1) for ell = 2, 3, 4 at 5e-3, exact counts,
//    under 10 s per ell at N = 12001.
Outcome poschl_teller_reproduction() {
  Outcome out;
  double worst = 0.0, slowest = 0.0;
  for (double ell : {2.0, 3.0, 4.0}) {
    const auto t0 = std::chrono::steady_clock::now();
    const EffectiveProblem1D prob =
        hyperboloid_problem("one_sheeted_hyperboloid", 1.0, ell, 60.0, 12001);
    const Spectrum spec = solve_bound_states(prob, 8);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    slowest = std::max(slowest, secs);
    const std::vector<double> exact = poschl_teller_exact(1.0, ell);
    if (spec.found != static_cast<int>(exact.size())) {
      out.pass = false;
      out.detail += " ell=" + fmt(ell) + ": found " + std::to_string(spec.found) +
                    " states, want " + std::to_string(exact.size()) + ";";
      continue;
    }
    for (size_t i = 0; i < exact.size(); ++i)
      worst = std::max(worst, std::abs(spec.eigenvalues[i] - exact[i]));
    if (secs >= 10.0) {
      out.pass = false;
      out.detail += " ell=" + fmt(ell) + " took " + fmt(secs) + "s;";
    }
  }
  if (worst >= 5e-3) out.pass = false;
  out.detail = "max|dE|=" + fmt(worst) + ", slowest solve " + fmt(slowest) + "s" + out.detail;
  return out;
}

// 2. ell = 0 on the one-sheeted hyperboloid binds nothing.
Outcome ell_zero_exclusion() {
  const EffectiveProblem1D prob =
      hyperboloid_problem("one_sheeted_hyperboloid", 1.0, 0.0, 60.0, 12001);
  const Spectrum spec = solve_bound_states(prob, 8);
  Outcome out;
  out.pass = spec.found == 0;
  out.detail = "bound states found: " + std::to_string(spec.found);
  return out;
}

// 3. Two-sheeted hyperboloid: no discrete state for ell in {0,1,2}; the
//    lowest windowed eigenvalue approaches 1/(4R^2) from above, monotonically
//    in the box size (same h across boxes).
Outcome two_sheeted_continuum() {
  Outcome out;
  for (double ell : {0.0, 1.0, 2.0}) {
    const EffectiveProblem1D prob =
        hyperboloid_problem("two_sheeted_hyperboloid", 1.0, ell, 60.0, 5999);
    const Spectrum spec = solve_bound_states(prob, 6);
    if (spec.found != 0) {
      out.pass = false;
      out.detail += " ell=" + fmt(ell) + ": " + std::to_string(spec.found) + " bound;";
    }
  }
  double worst_gap = 0.0;
  for (double ell : {0.0, 1.0, 2.0}) {
    double prev = HUGE_VAL;
    double gap = HUGE_VAL;
    for (int i = 0; i < 3; ++i) {
      const double L = 30.0 * (1 << i);
      const int n = static_cast<int>(std::lround(L / 0.01)) - 1;
      const EffectiveProblem1D prob =
          hyperboloid_problem("two_sheeted_hyperboloid", 1.0, ell, L, n);
      const double lo = solve_window(prob, 0.0, 1.0, 1).eigenvalues.at(0);
      if (lo < 0.25 - 1e-6 || lo > prev + 1e-12) {
        out.pass = false;
        out.detail += " ell=" + fmt(ell) + " L=" + fmt(L) + ": lambda=" + fmt(lo) + ";";
      }
      prev = lo;
      gap = lo - 0.25;
    }
    worst_gap = std::max(worst_gap, gap);
    if (gap > 2e-3) {
      out.pass = false;
      out.detail += " ell=" + fmt(ell) + ": gap " + fmt(gap) + " at L=120;";
    }
  }
  if (out.detail.empty())
    out.detail = "all windows above 1/4R^2, monotone; largest L=120 gap " + fmt(worst_gap);
  return out;
}

// 4. Euclidean sphere: first three states match n(n+1)/R^2 for ell = 1..3.
Outcome sphere_cross_check() {
  Outcome out;
  double worst = 0.0;
  for (int ell : {1, 2, 3}) {
    const Spectrum spec = sphere_effective_solve(1.0, ell, 3);
    const std::vector<double> exact = sphere_reference_exact(1.0, ell, ell + 2);
    if (spec.found != 3) {
      out.pass = false;
      out.detail += " ell=" + std::to_string(ell) + ": found " + std::to_string(spec.found) + ";";
      continue;
    }
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::abs(spec.eigenvalues[i] - exact[i]));
  }
  if (worst >= 1e-3) out.pass = false;
  out.detail = "max|dE|=" + fmt(worst) + out.detail;
  return out;
}

// 5. Umbilicity: |H^2 - eps K| < 1e-10 at 100 random points per hyperboloid,
//    and the emitted V_S column is identically zero.
Outcome umbilicity() {
  Outcome out;
  std::mt19937_64 rng(904);
  double worst = 0.0;
  for (const char* name : {"one_sheeted_hyperboloid", "two_sheeted_hyperboloid"}) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart chart = fam.chart();
    const Range r = sample_range(name);
    std::uniform_real_distribution<double> uq1(-2.0, 2.0), uq2(r.lo, r.hi);
    for (int i = 0; i < 100; ++i) {
      const ShapeData s = shape_data(chart, uq1(rng), uq2(rng));
      worst = std::max(worst, std::abs(s.H * s.H - s.eps * s.K));
    }
    const GridSpec grid{r.lo, r.hi, 301};
    const jobs::ResultTable t = jobs::emit_potential_profile(fam, 0.0, grid);
    for (const auto& row : t.rows)
      if (std::get<double>(row[2]) != 0.0) {
        out.pass = false;
        out.detail += std::string(" nonzero V_S sample on ") + name + ";";
        break;
      }
  }
  if (worst >= 1e-10) out.pass = false;
  out.detail = "max|H^2-epsK|=" + fmt(worst) + out.detail;
  return out;
}

// 6. Constant curvature through the generic finite-difference pipeline:
//    K = +1 (one-sheeted) and -1 (two-sheeted) to 1e-6 at 100 random points.
Outcome constant_curvature() {
  Outcome out;
  std::mt19937_64 rng(905);
  double worst = 0.0;
  for (const char* name : {"one_sheeted_hyperboloid", "two_sheeted_hyperboloid"}) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart fd = fam.chart(false);  // position only: forces FD
    const double want = name == std::string("one_sheeted_hyperboloid") ? 1.0 : -1.0;
    const Range r = sample_range(name);
    std::uniform_real_distribution<double> uq1(-1.5, 1.5), uq2(r.lo, r.hi);
    for (int i = 0; i < 100; ++i)
      worst = std::max(worst, std::abs(shape_data(fd, uq1(rng), uq2(rng)).K - want));
  }
  out.pass = worst < 1e-6;
  out.detail = "max|K-K_exact|=" + fmt(worst);
  return out;
}

// 7. Table-I conformance for the five sample families at 50 random points.
Outcome table_conformance() {
  Outcome out;
  std::mt19937_64 rng(906);
  const char* names[5] = {"one_sheeted_hyperboloid", "two_sheeted_hyperboloid",
                          "pseudo_cylinder", "rindler_wedge", "de_sitter_band"};
  for (const char* name : names) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart chart = fam.chart();
    const Range r = sample_range(name);
    std::uniform_real_distribution<double> uq1(-1.5, 1.5), uq2(r.lo, r.hi);
    for (int i = 0; i < 50; ++i) {
      const SymMat2 g = first_fundamental_form(chart, uq1(rng), uq2(rng));
      const Signature2 sig = classify_signature({g.m11, g.m12, g.m12, g.m22});
      if (sig.label != fam.surface_class) {
        out.pass = false;
        out.detail += std::string(" misclassified ") + name + ";";
        break;
      }
    }
  }
  if (out.detail.empty()) out.detail = "5 families x 50 points";
  return out;
}

// 8. Box degeneracy: E(n,n,n) = 0 exactly for n = 1..5 with a = b = c, and
//    E(1,1,1) = -pi^2/2 to 1e-12 for sides (1,2,2).
Outcome box_degeneracy() {
  Outcome out;
  double worst_diag = 0.0;
  for (int n = 1; n <= 5; ++n)
    worst_diag = std::max(worst_diag, std::abs(box_spectrum({1, 1, 1, n, n, n})));
  if (worst_diag != 0.0) {
    out.pass = false;
    out.detail = "E(n,n,n) at a=b=c is pi^2 n^2, max|E|=" + fmt(worst_diag) +
                 " (zero modes need n1^2 = n2^2 + n3^2, e.g. (5,3,4));";
  }
  const double e = box_spectrum({1, 2, 2, 1, 1, 1});
  const double want = -0.5 * std::numbers::pi * std::numbers::pi;
  if (std::abs(e - want) > 1e-12) {
    out.pass = false;
    out.detail += " E(1,1,1)|(1,2,2) off by " + fmt(std::abs(e - want)) + ";";
  } else {
    out.detail += " E(1,1,1)|(1,2,2) = -pi^2/2 ok";
  }
  return out;
}

// 9. Probability conservation: Gaussian packet on the two-sheeted
//    hyperboloid (ell = 1), norm drift <= 1e-10 over 1000 steps; continuity
//    residual order >= 1.8 under simultaneous (dt, h) halving.
Outcome probability_conservation() {
  Outcome out;
  const EffectiveProblem1D prob =
      hyperboloid_problem("two_sheeted_hyperboloid", 1.0, 1.0, 30.0, 2999);
  Wavefunction1D psi = gaussian_packet(prob, 15.0, 2.0, 1.0);
  const double n0 = psi.norm();
  double drift = 0.0;
  for (int s = 0; s < 10; ++s) {
    psi = propagate(prob, psi, 1e-4, 100);
    drift = std::max(drift, std::abs(psi.norm() - n0));
  }
  if (drift > 1e-10) out.pass = false;

  auto residual_at = [](int n, double dt) {
    const EffectiveProblem1D p =
        hyperboloid_problem("two_sheeted_hyperboloid", 1.0, 1.0, 30.0, n);
    Wavefunction1D w = gaussian_packet(p, 15.0, 2.0, 1.0);
    w = propagate(p, w, dt, 10);
    const Wavefunction1D next = propagate(p, w, dt, 1);
    return continuity_residual(w, next, dt, p.eta);
  };
  const double rc = residual_at(1499, 2e-3);
  const double rf = residual_at(2999, 1e-3);
  const double order = std::log2(rc / rf);
  if (!(order >= 1.8)) out.pass = false;
  out.detail = "norm drift " + fmt(drift) + " over 1000 steps, residual order " + fmt(order);
  return out;
}

// 10. Closed-form curvatures agree with the generic finite-difference
//     pipeline to 1e-6 across all five families, 100 points each.
Outcome closed_vs_generic() {
  Outcome out;
  std::mt19937_64 rng(910);
  const char* names[5] = {"one_sheeted_hyperboloid", "two_sheeted_hyperboloid",
                          "pseudo_cylinder", "rindler_wedge", "de_sitter_band"};
  double worst = 0.0;
  for (const char* name : names) {
    const RevolutionFamily fam = make_builtin_family(name, 1.0);
    const SurfaceChart fd = fam.chart(false);
    const Range r = sample_range(name);
    std::uniform_real_distribution<double> uq1(-1.5, 1.5), uq2(r.lo, r.hi);
    for (int i = 0; i < 100; ++i) {
      const double q1 = uq1(rng), q2 = uq2(rng);
      const ShapeData s = shape_data(fd, q1, q2);
      const PrincipalCurvatures k = closed_form_curvatures(fam, q2);
      worst = std::max({worst, std::abs(s.a11 - k.k1), std::abs(s.a22 - k.k2)});
    }
  }
  out.pass = worst < 1e-6;
  out.detail = "max|k_closed - k_generic|=" + fmt(worst);
  return out;
}

const Check kChecks[] = {
    {1, "Poschl-Teller reproduction (one-sheeted, ell=2,3,4)", poschl_teller_reproduction},
    {2, "ell=0 exclusion (one-sheeted hyperboloid)", ell_zero_exclusion},
    {3, "two-sheeted hyperboloid continuum threshold", two_sheeted_continuum},
    {4, "Euclidean sphere cross-check", sphere_cross_check},
    {5, "umbilicity and vanishing V_S column", umbilicity},
    {6, "constant Gaussian curvature via generic pipeline", constant_curvature},
    {7, "Table-I conformance of the five sample families", table_conformance},
    {8, "box degeneracy", box_degeneracy},
    {9, "probability conservation and continuity order", probability_conservation},
    {10, "closed-form vs generic curvatures", closed_vs_generic},
};

}  // namespace

int main() {
  std::printf("acceptance suite (units: hbar = 2m = 1)\n");
  int failures = 0;
  for (const Check& c : kChecks) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d] %s  %-52s %s (%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n",
              static_cast<int>(std::size(kChecks)) - failures,
              static_cast<int>(std::size(kChecks)));
  return failures;
}
