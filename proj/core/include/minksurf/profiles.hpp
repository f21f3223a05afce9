#pragma once

#include <string>
#include <vector>

#include "minksurf/revolution.hpp"

namespace minksurf {

// Built-in profile registry. One sample per Table-I family plus the
// Euclidean sphere reference:
//
//   one_sheeted_hyperboloid(R)  time-like axis, time-like curve
//                               u = R sinh(q2/R), v = R cosh(q2/R), q2 in R
//   two_sheeted_hyperboloid(R)  time-like axis, space-like curve
//                               u = R cosh(q2/R), v = R sinh(q2/R), q2 > 0
//   pseudo_cylinder(u0)         space-like axis, time-like plane, space-like
//                               curve: u = u0, v = q2 (Euclidean-signature
//                               cylinder analog)
//   rindler_wedge(u0)           space-like axis, time-like plane, time-like
//                               curve: u = u0 + q2, v = 0 (flat wedge)
//   de_sitter_band(R)           space-like axis, space-like plane:
//                               u = R cos(q2/R), v = R sin(q2/R),
//                               |q2| < pi R / 2
//   sphere_euclidean(R)         Euclidean reference, spectrum jobs only
//                               (not a Minkowski revolution family)

struct BuiltinProfile {
  std::string name;
  std::string param_name;      // "R" or "u0"
  bool euclidean_reference{false};
};

const std::vector<BuiltinProfile>& builtin_profiles();
bool is_builtin_profile(const std::string& name);
bool is_euclidean_reference(const std::string& name);

// Throws UnknownProfile for unregistered names and for sphere_euclidean,
// which has no Minkowski chart. Throws std::invalid_argument for param <= 0.
RevolutionFamily make_builtin_family(const std::string& name, double param);

// Default sampling interval in q2 for reports on a builtin family (stays
// clear of singular domain endpoints).
GridSpec default_grid(const std::string& name, double param, int n);

}  // namespace minksurf
