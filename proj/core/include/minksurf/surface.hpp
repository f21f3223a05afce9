#pragma once

#include <cmath>
#include <functional>

#include "minksurf/lorentz.hpp"

namespace minksurf {

// Generic parametrized-surface engine for immersions r(q1,q2) into R^3_1.
//
// Normal convention: N = (d1 r x_1 d2 r)/sqrt(|det g|), never re-oriented.
// The shape matrix returned by shape_data() is the matrix of dN in the
// coordinate basis, dN/dq_i = sum_j a_ij dr/dq_j, i.e. [a] = -[h][g]^-1.
// H and K are orientation-/convention-independent through
// H = (eps/2) tr a and K = eps det a, except for the sign of H itself,
// which flips with N; all derived quantities below use H^2, tr, det.

using ChartFn = std::function<MinkVector(double, double)>;

struct SurfaceChart {
  ChartFn position;             // r(q1,q2); required
  ChartFn d1, d2;               // analytic first partials (optional)
  ChartFn d11, d12, d22;        // analytic second partials (optional)
  double q1_min = -HUGE_VAL, q1_max = HUGE_VAL;
  double q2_min = -HUGE_VAL, q2_max = HUGE_VAL;

  bool has_first_partials() const { return static_cast<bool>(d1) && static_cast<bool>(d2); }
  bool has_second_partials() const {
    return static_cast<bool>(d11) && static_cast<bool>(d12) && static_cast<bool>(d22);
  }
};

struct SymMat2 {
  double m11{0.0}, m12{0.0}, m22{0.0};
  double det() const { return m11 * m22 - m12 * m12; }
};

struct FundamentalForms {
  SymMat2 g;   // first fundamental form
  SymMat2 h;   // second fundamental form, h_ij = <N, d_i d_j r>_1
  double detg{0.0};
  int eps{0};  // <N,N>_1
};

struct ShapeData {
  double a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};  // matrix of dN
  double H{0.0};  // mean curvature, (eps/2) tr a
  double K{0.0};  // Gaussian curvature, eps det a
  int eps{0};
  bool diagonalizable{true};  // real eigenvalues <=> H^2 - eps K >= 0
};

struct UnitNormal {
  MinkVector N;
  int eps{0};
};

struct TubularMetric {
  double G11{0.0}, G12{0.0}, G22{0.0}, G33{0.0};  // G_i3 = 0 for i = 1,2
  double f{0.0};  // volume factor, eps [1 + q3 tr a + q3^2 det a]
};

SymMat2 first_fundamental_form(const SurfaceChart& chart, double q1, double q2);
UnitNormal unit_normal(const SurfaceChart& chart, double q1, double q2);
FundamentalForms fundamental_forms(const SurfaceChart& chart, double q1, double q2);
ShapeData shape_data(const SurfaceChart& chart, double q1, double q2);

// Geometry-induced potential V_S = -(eps H^2 - K) in units hbar^2/2m = 1.
double geometric_potential(const SurfaceChart& chart, double q1, double q2);

TubularMetric tubular_metric(const SurfaceChart& chart, double q1, double q2, double q3);

}  // namespace minksurf
