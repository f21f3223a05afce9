#pragma once

namespace minksurf {

// Vector algebra of R^3_1: R^3 equipped with the indefinite metric
// diag(-1,+1,+1). The x1 component carries the minus sign.

struct MinkVector {
  double x1{0.0}, x2{0.0}, x3{0.0};

  friend MinkVector operator+(const MinkVector& a, const MinkVector& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend MinkVector operator-(const MinkVector& a, const MinkVector& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend MinkVector operator*(double s, const MinkVector& v) {
    return {s * v.x1, s * v.x2, s * v.x3};
  }
  friend MinkVector operator-(const MinkVector& v) { return {-v.x1, -v.x2, -v.x3}; }
  MinkVector& operator+=(const MinkVector& o) {
    x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }

  bool finite() const;
  double max_abs() const;
};

// Causal character of a vector: space-like if <v,v>_1 > 0 or v = 0,
// time-like if < 0, light-like if = 0 and v != 0.
enum class CausalClass { SpaceLike, TimeLike, LightLike };

// Signature label of a 2x2 induced metric: (+,+) Riemannian (space-like
// surface), (-,+) Lorentzian (time-like surface), (0,+) degenerate
// (light-like surface).
enum class SurfaceClass { Riemannian, Lorentzian, Degenerate };

struct Signature2 {
  int s1{0};  // sign of the smaller eigenvalue (-1, 0, +1)
  int s2{0};  // sign of the larger eigenvalue
  SurfaceClass label{SurfaceClass::Riemannian};
};

struct Mat2 {
  double m11{0.0}, m12{0.0}, m21{0.0}, m22{0.0};
};

// Zero tolerance for light-like / degenerate detection, applied after
// normalizing the input by its largest component magnitude.
inline constexpr double kCausalTol = 1e-10;

// <a,b>_1 = -a1 b1 + a2 b2 + a3 b3
double lorentz_inner(const MinkVector& a, const MinkVector& b);

// a x_1 b, fixed by the triple-product identity <a x_1 b, c>_1 = det(a,b,c).
MinkVector lorentz_cross(const MinkVector& a, const MinkVector& b);

CausalClass classify_vector(const MinkVector& v);

// Signs of the two eigenvalues of a symmetric 2x2 matrix, |lambda| below the
// normalized tolerance reported as 0. Throws std::invalid_argument for
// non-symmetric input or for sign patterns no surface in R^3_1 can induce.
Signature2 classify_signature(const Mat2& g);

const char* to_string(CausalClass c);
const char* to_string(SurfaceClass c);

}  // namespace minksurf
