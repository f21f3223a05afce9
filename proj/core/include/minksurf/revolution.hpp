#pragma once

#include <functional>
#include <string>
#include <vector>

#include "minksurf/surface.hpp"

namespace minksurf {

// Surfaces of revolution in R^3_1 with a non-light-like axis. The five
// admissible types, keyed by the causal characters of (axis, plane, curve):
//
//   tag                                    chart r(q1,q2)                          surface
//   SpacelikeAxisTimelikePlaneTimelikeCurve  (u ch q1, u sh q1, v)   eta=-1         time-like
//   SpacelikeAxisTimelikePlaneSpacelikeCurve (u ch q1, u sh q1, v)   eta=+1         space-like
//   SpacelikeAxisSpacelikePlane              (u sh q1, u ch q1, v)   eta=+1         time-like
//   TimelikeAxisTimelikeCurve                (u, v sin q1, v cos q1) eta=-1         time-like
//   TimelikeAxisSpacelikeCurve               (u, v sin q1, v cos q1) eta=+1         space-like
//
// Profile curves are supplied in arc length; eta = <alpha',alpha'>_1.

enum class FamilyTag {
  SpacelikeAxisTimelikePlaneTimelikeCurve,
  SpacelikeAxisTimelikePlaneSpacelikeCurve,
  SpacelikeAxisSpacelikePlane,
  TimelikeAxisTimelikeCurve,
  TimelikeAxisSpacelikeCurve,
};

enum class PlaneClass { SpaceLike, TimeLike };

using Profile1Fn = std::function<double(double)>;

struct ProfileCurve {
  Profile1Fn u, v;        // alpha components in the profile plane
  Profile1Fn du, dv;      // first derivatives
  Profile1Fn ddu, ddv;    // second derivatives
  int eta{+1};            // curve causal sign <alpha',alpha'>_1
  double q2_min = -HUGE_VAL, q2_max = HUGE_VAL;  // open-interval domain bounds
  // Optional stable closed form for the second principal curvature. The
  // generic combination v''u' - v'u'' cancels catastrophically for
  // hyperbolic profiles once cosh^2(q2/R) outgrows 1/eps; profiles with an
  // exact k2 should supply it here.
  Profile1Fn k2_closed;
};

struct RevolutionFamily {
  FamilyTag tag{};
  ProfileCurve profile;
  int eps{0};                       // surface normal sign <N,N>_1
  SurfaceClass surface_class{};     // Table-I surface causal class
  bool periodic_angle{false};       // time-like axis: q1 in [0,2pi), ell integer
  PlaneClass plane{};               // causal class of the profile plane

  // Chart built by applying the family's rotation to the profile curve.
  // With analytic=false only the position map is exposed, which forces the
  // generic finite-difference pipeline of the surface module.
  SurfaceChart chart(bool analytic = true) const;

  // g11(q2) of the induced metric (signed; the q1q1 coefficient).
  double radial_g11(double q2) const;

  // |g11|^(1/2): the u(q2) or v(q2) the reduced 1D equation divides by.
  double radial_coord(double q2) const;
};

RevolutionFamily build_family(FamilyTag tag, ProfileCurve profile);

// Principal curvatures (a11, a22) of the diagonal Weingarten (dN) matrix,
// from the family's closed forms. Agrees with shape_data on the chart.
struct PrincipalCurvatures {
  double k1{0.0}, k2{0.0};
};
PrincipalCurvatures closed_form_curvatures(const RevolutionFamily& fam, double q2);

struct GridSpec {
  double a{0.0}, b{0.0};  // Dirichlet walls
  int n{0};               // number of interior points
};

// Reduced 1D eigenproblem -(1/eta) y'' + [V_eff - E] y = 0 on interior grid
// points q_i = a + (i+1) h, h = (b-a)/(n+1), Dirichlet walls at a and b.
struct EffectiveProblem1D {
  std::vector<double> q;     // interior points, ascending
  double h{0.0};
  double a{0.0}, b{0.0};
  std::vector<double> V;     // V_eff samples
  int eta{+1};               // mass sign on the kinetic term
  double ell{0.0};
  std::vector<double> w;     // substitution weight u^(-1/2) or v^(-1/2)
  // Walls that truncate an infinite domain direction define the continuum
  // edge; hard walls (natural finite boundaries) do not.
  bool left_truncates_infinity{false};
  bool right_truncates_infinity{false};
};

EffectiveProblem1D effective_problem(const RevolutionFamily& fam, double ell,
                                     const GridSpec& grid);

// 1D geometry-induced potential for a particle on a plane curve of curvature
// kappa: -kappa^2/4 on a space-like plane; -eps_curve kappa^2/4 on a
// time-like plane (eps_curve = +1 time-like, -1 space-like curve).
double curve_1d_potential(double kappa, PlaneClass plane, int eps_curve);

// The two intrinsic pieces of V_eff: a centripetal term from the rotation and
// the profile-curve confinement term (which equals curve_1d_potential).
double centripetal_term(const RevolutionFamily& fam, double ell, double q2);
double curve_term(const RevolutionFamily& fam, double q2);

struct AngularMode {
  std::string description;  // e.g. "chi1(q1) = exp(i ell q1)"
  double E1{0.0};           // ell^2 in internal units
  bool discrete{false};     // true iff the angular spectrum is discrete
};
AngularMode angular_mode(const RevolutionFamily& fam, double ell);

}  // namespace minksurf
