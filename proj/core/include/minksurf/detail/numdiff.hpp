#pragma once

#include <cmath>

namespace minksurf::detail {

// 4th-order central differences with one Richardson level over steps
// (h, 2h). The Richardson pair is taken upward from h so the finest
// evaluations stay at h, keeping cancellation noise at the h level.

inline double fd_step(double q) { return std::max(1e-4, 1e-4 * std::abs(q)); }

// f'(x), 5-point stencil: weights (+1, -8, 0, +8, -1)/(12h)
template <typename F>
auto central1(F&& f, double x, double h) {
  return (1.0 / (12.0 * h)) * (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h));
}

// f''(x), 5-point stencil: weights (-1, 16, -30, 16, -1)/(12h^2)
template <typename F>
auto central2(F&& f, double x, double h) {
  return (1.0 / (12.0 * h * h)) *
         (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h));
}

template <typename F>
auto richardson1(F&& f, double x, double h) {
  return (1.0 / 15.0) * (16.0 * central1(f, x, h) - central1(f, x, 2 * h));
}

template <typename F>
auto richardson2(F&& f, double x, double h) {
  return (1.0 / 15.0) * (16.0 * central2(f, x, h) - central2(f, x, 2 * h));
}

// Mixed partial d^2 f / dx dy as the tensor product of two first-derivative
// stencils, again Richardson-extrapolated over (h, 2h).
template <typename F>
auto cross_once(F&& f, double x, double y, double hx, double hy) {
  constexpr int off[4] = {-2, -1, 1, 2};
  constexpr double wgt[4] = {1.0, -8.0, 8.0, -1.0};
  auto acc = 0.0 * f(x, y);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      acc += (wgt[i] * wgt[j]) * f(x + off[i] * hx, y + off[j] * hy);
  return (1.0 / (144.0 * hx * hy)) * acc;
}

template <typename F>
auto richardson_cross(F&& f, double x, double y, double hx, double hy) {
  return (1.0 / 15.0) *
         (16.0 * cross_once(f, x, y, hx, hy) - cross_once(f, x, y, 2 * hx, 2 * hy));
}

}  // namespace minksurf::detail
