#include "minksurf/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "minksurf/errors.hpp"

namespace minksurf {

namespace {

void check_param(const std::string& name, double param) {
  if (!(param > 0.0) || !std::isfinite(param))
    throw std::invalid_argument(name + ": scale parameter must be > 0");
}

RevolutionFamily one_sheeted_hyperboloid(double R) {
  ProfileCurve p;
  p.u = [R](double q2) { return R * std::sinh(q2 / R); };
  p.v = [R](double q2) { return R * std::cosh(q2 / R); };
  p.du = [R](double q2) { return std::cosh(q2 / R); };
  p.dv = [R](double q2) { return std::sinh(q2 / R); };
  p.ddu = [R](double q2) { return std::sinh(q2 / R) / R; };
  p.ddv = [R](double q2) { return std::cosh(q2 / R) / R; };
  p.eta = -1;
  p.k2_closed = [R](double) { return -1.0 / R; };
  return build_family(FamilyTag::TimelikeAxisTimelikeCurve, std::move(p));
}

RevolutionFamily two_sheeted_hyperboloid(double R) {
  ProfileCurve p;
  p.u = [R](double q2) { return R * std::cosh(q2 / R); };
  p.v = [R](double q2) { return R * std::sinh(q2 / R); };
  p.du = [R](double q2) { return std::sinh(q2 / R); };
  p.dv = [R](double q2) { return std::cosh(q2 / R); };
  p.ddu = [R](double q2) { return std::cosh(q2 / R) / R; };
  p.ddv = [R](double q2) { return std::sinh(q2 / R) / R; };
  p.eta = +1;
  p.q2_min = 0.0;  // v = R sinh(q2/R) > 0
  p.k2_closed = [R](double) { return -1.0 / R; };
  return build_family(FamilyTag::TimelikeAxisSpacelikeCurve, std::move(p));
}

RevolutionFamily pseudo_cylinder(double u0) {
  ProfileCurve p;
  p.u = [u0](double) { return u0; };
  p.v = [](double q2) { return q2; };
  p.du = [](double) { return 0.0; };
  p.dv = [](double) { return 1.0; };
  p.ddu = [](double) { return 0.0; };
  p.ddv = [](double) { return 0.0; };
  p.eta = +1;
  return build_family(FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve, std::move(p));
}

RevolutionFamily rindler_wedge(double u0) {
  ProfileCurve p;
  p.u = [u0](double q2) { return u0 + q2; };
  p.v = [](double) { return 0.0; };
  p.du = [](double) { return 1.0; };
  p.dv = [](double) { return 0.0; };
  p.ddu = [](double) { return 0.0; };
  p.ddv = [](double) { return 0.0; };
  p.eta = -1;
  p.q2_min = -u0;  // u = u0 + q2 > 0
  return build_family(FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve, std::move(p));
}

RevolutionFamily de_sitter_band(double R) {
  ProfileCurve p;
  p.u = [R](double q2) { return R * std::cos(q2 / R); };
  p.v = [R](double q2) { return R * std::sin(q2 / R); };
  p.du = [R](double q2) { return -std::sin(q2 / R); };
  p.dv = [R](double q2) { return std::cos(q2 / R); };
  p.ddu = [R](double q2) { return -std::cos(q2 / R) / R; };
  p.ddv = [R](double q2) { return -std::sin(q2 / R) / R; };
  p.eta = +1;
  p.q2_min = -0.5 * std::numbers::pi * R;  // u = R cos(q2/R) > 0
  p.q2_max = 0.5 * std::numbers::pi * R;
  return build_family(FamilyTag::SpacelikeAxisSpacelikePlane, std::move(p));
}

}  // namespace

const std::vector<BuiltinProfile>& builtin_profiles() {
  static const std::vector<BuiltinProfile> registry = {
      {"one_sheeted_hyperboloid", "R", false},
      {"two_sheeted_hyperboloid", "R", false},
      {"pseudo_cylinder", "u0", false},
      {"rindler_wedge", "u0", false},
      {"de_sitter_band", "R", false},
      {"sphere_euclidean", "R", true},
  };
  return registry;
}

bool is_builtin_profile(const std::string& name) {
  for (const auto& p : builtin_profiles())
    if (p.name == name) return true;
  return false;
}

bool is_euclidean_reference(const std::string& name) {
  for (const auto& p : builtin_profiles())
    if (p.name == name) return p.euclidean_reference;
  return false;
}

RevolutionFamily make_builtin_family(const std::string& name, double param) {
  check_param(name, param);
  if (name == "one_sheeted_hyperboloid") return one_sheeted_hyperboloid(param);
  if (name == "two_sheeted_hyperboloid") return two_sheeted_hyperboloid(param);
  if (name == "pseudo_cylinder") return pseudo_cylinder(param);
  if (name == "rindler_wedge") return rindler_wedge(param);
  if (name == "de_sitter_band") return de_sitter_band(param);
  if (name == "sphere_euclidean")
    throw UnknownProfileError("sphere_euclidean is a Euclidean reference, not a Minkowski family");
  throw UnknownProfileError(name);
}

GridSpec default_grid(const std::string& name, double param, int n) {
  check_param(name, param);
  GridSpec g;
  g.n = n;
  if (name == "one_sheeted_hyperboloid" || name == "pseudo_cylinder") {
    g.a = -60.0 * param;
    g.b = 60.0 * param;
  } else if (name == "two_sheeted_hyperboloid") {
    g.a = 0.0;
    g.b = 60.0 * param;
  } else if (name == "rindler_wedge") {
    g.a = -param;
    g.b = 119.0 * param;
  } else if (name == "de_sitter_band") {
    // stay clear of the u -> 0 endpoints
    g.a = -0.49 * std::numbers::pi * param;
    g.b = 0.49 * std::numbers::pi * param;
  } else {
    throw UnknownProfileError(name);
  }
  return g;
}

}  // namespace minksurf
