#include "minksurf/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "minksurf/errors.hpp"

namespace minksurf {

namespace {

constexpr double kInf = HUGE_VAL;

// Symmetric tridiagonal operator handed to the eigensolver. For eta = +1
// this is T = -D2 + diag(V); for eta = -1 it is -T_phys = -D2 - diag(V),
// whose eigenvalues are the negated physical ones.
struct SymTridiag {
  std::vector<double> d, e;
  int sign;  // +1: already physical; -1: physical = -lambda
};

SymTridiag assemble_flipped(const EffectiveProblem1D& prob) {
  const int n = static_cast<int>(prob.q.size());
  if (n < 1 || prob.V.size() != prob.q.size() || !(prob.h > 0.0))
    throw std::invalid_argument("EffectiveProblem1D: inconsistent grid");
  SymTridiag t;
  t.sign = prob.eta >= 0 ? +1 : -1;
  const double inv_h2 = 1.0 / (prob.h * prob.h);
  t.d.resize(n);
  t.e.assign(std::max(0, n - 1), -inv_h2);
  for (int i = 0; i < n; ++i) t.d[i] = 2.0 * inv_h2 + t.sign * prob.V[i];
  return t;
}

struct EigenPairs {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // empty until requested
};

// Bisection (dstebz) for selected eigenvalues, inverse iteration (dstein)
// for the matching eigenvectors. range 'I' selects by index [il, iu],
// range 'V' by value (vl, vu].
EigenPairs eigen_select(const SymTridiag& t, char range, double vl, double vu, int il,
                        int iu, bool want_vectors) {
  const int n = static_cast<int>(t.d.size());
  EigenPairs out;
  int m = 0, nsplit = 0;
  std::vector<double> w(n);
  std::vector<lapack_int> iblock(n), isplit(n);
  lapack_int info = LAPACKE_dstebz(range, 'B', n, vl, vu, il, iu, 0.0, t.d.data(),
                                   t.e.data(), &m, &nsplit, w.data(), iblock.data(),
                                   isplit.data());
  if (info != 0) throw NotConvergedError("dstebz info=" + std::to_string(info));
  w.resize(m);
  out.values.assign(w.begin(), w.end());

  if (want_vectors && m > 0) {
    std::vector<double> z(static_cast<size_t>(n) * m);
    std::vector<lapack_int> ifail(m);
    info = LAPACKE_dstein(LAPACK_COL_MAJOR, n, t.d.data(), t.e.data(), m, w.data(),
                          iblock.data(), isplit.data(), z.data(), n, ifail.data());
    if (info != 0) throw NotConvergedError("dstein info=" + std::to_string(info));
    out.vectors.resize(m);
    for (int k = 0; k < m; ++k)
      out.vectors[k].assign(z.begin() + static_cast<size_t>(k) * n,
                            z.begin() + static_cast<size_t>(k + 1) * n);
  }
  return out;
}

EigenPairs eigen_lowest(const SymTridiag& t, int count, bool want_vectors) {
  count = std::min(count, static_cast<int>(t.d.size()));
  if (count <= 0) return {};
  return eigen_select(t, 'I', 0.0, 0.0, 1, count, want_vectors);
}

EigenPairs eigen_in_range(const SymTridiag& t, double lo, double hi, bool want_vectors) {
  if (!(hi > lo)) return {};
  return eigen_select(t, 'V', lo, hi, 0, 0, want_vectors);
}

// L2-normalize on the grid and fix the overall sign so the largest-magnitude
// component is positive (bit-reproducible output).
void normalize_grid(std::vector<double>& y, double h) {
  double s = 0.0, peak = 0.0;
  size_t ipeak = 0;
  for (size_t i = 0; i < y.size(); ++i) {
    s += y[i] * y[i];
    if (std::abs(y[i]) > peak) {
      peak = std::abs(y[i]);
      ipeak = i;
    }
  }
  const double scale = (s > 0.0 ? 1.0 / std::sqrt(s * h) : 1.0) *
                       (y.empty() || y[ipeak] >= 0.0 ? 1.0 : -1.0);
  for (double& v : y) v *= scale;
}

// lim inf of the (flipped) potential over the walls that truncate infinity;
// +inf when the domain is naturally compact.
double continuum_edge_flipped(const EffectiveProblem1D& prob, int sign) {
  const int n = static_cast<int>(prob.q.size());
  const int outer = std::max(3, n / 100);
  double edge = kInf;
  if (prob.left_truncates_infinity)
    for (int i = 0; i < std::min(outer, n); ++i) edge = std::min(edge, sign * prob.V[i]);
  if (prob.right_truncates_infinity)
    for (int i = std::max(0, n - outer); i < n; ++i) edge = std::min(edge, sign * prob.V[i]);
  return edge;
}

}  // namespace

Spectrum solve_bound_states(const EffectiveProblem1D& prob, int max_states) {
  if (max_states < 1) throw std::invalid_argument("solve_bound_states: max_states < 1");
  const SymTridiag t = assemble_flipped(prob);
  EigenPairs pairs = eigen_lowest(t, max_states, false);

  // Truncating the domain shifts the discretized continuum up from the edge
  // by at least one box mode; ten of those separate genuine bound states
  // from box artifacts.
  const double edge = continuum_edge_flipped(prob, t.sign);
  const double box_resolution = std::pow(std::numbers::pi / (prob.b - prob.a), 2);
  const double cutoff = edge - 10.0 * box_resolution;

  int nb = 0;
  while (nb < static_cast<int>(pairs.values.size()) && pairs.values[nb] < cutoff) ++nb;

  Spectrum spec;
  spec.kind = SpectrumKind::BoundStates;
  spec.requested = max_states;
  spec.found = nb;
  if (nb > 0) {
    EigenPairs bound = eigen_lowest(t, nb, true);
    for (auto& y : bound.vectors) normalize_grid(y, prob.h);
    spec.eigenvalues.assign(bound.values.begin(), bound.values.end());
    spec.eigenvectors = std::move(bound.vectors);
    if (t.sign < 0) {
      // report on the paper's side of the sign flip, ascending
      for (double& v : spec.eigenvalues) v = -v;
      std::reverse(spec.eigenvalues.begin(), spec.eigenvalues.end());
      std::reverse(spec.eigenvectors.begin(), spec.eigenvectors.end());
    }
  }
  return spec;
}

Spectrum solve_window(const EffectiveProblem1D& prob, double lo, double hi, int max_states) {
  if (max_states < 1) throw std::invalid_argument("solve_window: max_states < 1");
  if (!(hi > lo)) throw std::invalid_argument("solve_window: empty window");
  const SymTridiag t = assemble_flipped(prob);
  const double flo = t.sign > 0 ? lo : -hi;
  const double fhi = t.sign > 0 ? hi : -lo;
  EigenPairs pairs = eigen_in_range(t, flo, fhi, true);

  // keep at most max_states values closest to the physical lower window edge
  if (static_cast<int>(pairs.values.size()) > max_states) {
    if (t.sign > 0) {
      pairs.values.resize(max_states);
      pairs.vectors.resize(max_states);
    } else {
      pairs.values.erase(pairs.values.begin(), pairs.values.end() - max_states);
      pairs.vectors.erase(pairs.vectors.begin(), pairs.vectors.end() - max_states);
    }
  }
  for (auto& y : pairs.vectors) normalize_grid(y, prob.h);

  Spectrum spec;
  spec.kind = SpectrumKind::Window;
  spec.window_lo = lo;
  spec.window_hi = hi;
  spec.requested = max_states;
  spec.eigenvalues.assign(pairs.values.begin(), pairs.values.end());
  spec.eigenvectors = std::move(pairs.vectors);
  if (t.sign < 0) {
    for (double& v : spec.eigenvalues) v = -v;
    std::reverse(spec.eigenvalues.begin(), spec.eigenvalues.end());
    std::reverse(spec.eigenvectors.begin(), spec.eigenvectors.end());
  }
  spec.found = static_cast<int>(spec.eigenvalues.size());
  return spec;
}

std::vector<double> poschl_teller_exact(double R, double ell) {
  if (!(R > 0.0)) throw std::invalid_argument("poschl_teller_exact: R must be > 0");
  std::vector<double> out;
  const double al = std::abs(ell);
  for (int n = 0; n < al - 0.5; ++n) out.push_back((n - al) * (n - al + 1.0) / (R * R));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> sphere_reference_exact(double R, int ell, int n_max) {
  if (!(R > 0.0)) throw std::invalid_argument("sphere_reference_exact: R must be > 0");
  std::vector<double> out;
  for (int n = std::abs(ell); n <= n_max; ++n)
    out.push_back(static_cast<double>(n) * (n + 1) / (R * R));
  return out;
}

Spectrum sphere_effective_solve(double R, int ell, int max_states, int n_grid) {
  if (!(R > 0.0)) throw std::invalid_argument("sphere_effective_solve: R must be > 0");
  if (ell == 0)
    throw SingularChannelError(
        "ell=0: csc^2 coefficient is negative and singular at the poles");
  EffectiveProblem1D prob;
  prob.a = 0.0;
  prob.b = std::numbers::pi * R;
  prob.h = prob.b / (n_grid + 1);
  prob.eta = +1;
  prob.ell = ell;
  prob.q.resize(n_grid);
  prob.V.resize(n_grid);
  const double c = (static_cast<double>(ell) * ell - 0.25) / (R * R);
  for (int i = 0; i < n_grid; ++i) {
    const double s = (i + 1) * prob.h;
    prob.q[i] = s;
    const double sn = std::sin(s / R);
    prob.V[i] = -0.25 / (R * R) + c / (sn * sn);
  }
  // compact domain: every state below the walls is genuine
  return solve_bound_states(prob, max_states);
}

double box_spectrum(const BoxSpec& spec) {
  if (!(spec.a > 0.0 && spec.b > 0.0 && spec.c > 0.0))
    throw std::invalid_argument("box_spectrum: side lengths must be > 0");
  if (spec.n1 < 1 || spec.n2 < 1 || spec.n3 < 1)
    throw std::invalid_argument("box_spectrum: mode numbers must be >= 1");
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double t1 = static_cast<double>(spec.n1) * spec.n1 / (spec.a * spec.a);
  const double t2 = static_cast<double>(spec.n2) * spec.n2 / (spec.b * spec.b);
  const double t3 = static_cast<double>(spec.n3) * spec.n3 / (spec.c * spec.c);
  return pi2 * (-t1 + t2 + t3);
}

double Wavefunction1D::norm() const {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return s * h;
}

Wavefunction1D gaussian_packet(const EffectiveProblem1D& prob, double center, double width,
                               double k0) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian_packet: width must be > 0");
  Wavefunction1D psi;
  psi.q = prob.q;
  psi.h = prob.h;
  psi.amp.resize(prob.q.size());
  for (size_t i = 0; i < prob.q.size(); ++i) {
    const double x = prob.q[i] - center;
    psi.amp[i] = std::polar(std::exp(-x * x / (4.0 * width * width)), k0 * prob.q[i]);
  }
  const double n = psi.norm();
  if (!(n > 0.0)) throw std::invalid_argument("gaussian_packet: vanishing norm on grid");
  const double s = 1.0 / std::sqrt(n);
  for (auto& a : psi.amp) a *= s;
  return psi;
}

Wavefunction1D stationary_state(const EffectiveProblem1D& prob,
                                const std::vector<double>& eigenvector) {
  if (eigenvector.size() != prob.q.size())
    throw GridMismatchError("eigenvector length != grid size");
  Wavefunction1D psi;
  psi.q = prob.q;
  psi.h = prob.h;
  psi.amp.assign(eigenvector.begin(), eigenvector.end());
  return psi;
}

namespace {

void check_same_grid(const EffectiveProblem1D& prob, const Wavefunction1D& psi) {
  if (psi.q.size() != prob.q.size() || psi.amp.size() != prob.q.size())
    throw GridMismatchError("wavefunction grid size != problem grid size");
  if (std::abs(psi.h - prob.h) > 1e-14 * prob.h ||
      std::abs(psi.q.front() - prob.q.front()) > 1e-12 ||
      std::abs(psi.q.back() - prob.q.back()) > 1e-12)
    throw GridMismatchError("wavefunction grid does not match problem grid");
}

}  // namespace

Wavefunction1D propagate(const EffectiveProblem1D& prob, const Wavefunction1D& psi0,
                         double dt, int steps) {
  if (!(dt > 0.0)) throw std::invalid_argument("propagate: dt must be > 0");
  if (steps < 0) throw std::invalid_argument("propagate: negative step count");
  check_same_grid(prob, psi0);

  const int n = static_cast<int>(prob.q.size());
  const double inv_h2 = 1.0 / (prob.h * prob.h);
  const double kin_diag = 2.0 * inv_h2 / prob.eta;
  const double kin_off = -inv_h2 / prob.eta;
  const std::complex<double> half_i_dt(0.0, 0.5 * dt);

  // Cayley scheme: (I + i dt/2 H) psi' = (I - i dt/2 H) psi
  std::vector<std::complex<double>> diag_a(n), diag_b(n);
  for (int i = 0; i < n; ++i) {
    const double Hd = kin_diag + prob.V[i];
    diag_a[i] = 1.0 + half_i_dt * Hd;
    diag_b[i] = 1.0 - half_i_dt * Hd;
  }
  const std::complex<double> off_a = half_i_dt * kin_off;
  const std::complex<double> off_b = -half_i_dt * kin_off;

  Wavefunction1D psi = psi0;
  std::vector<std::complex<double>> rhs(n), dl(std::max(0, n - 1)), du(std::max(0, n - 1)),
      dmain(n);
  for (int s = 0; s < steps; ++s) {
    for (int i = 0; i < n; ++i) {
      rhs[i] = diag_b[i] * psi.amp[i];
      if (i > 0) rhs[i] += off_b * psi.amp[i - 1];
      if (i + 1 < n) rhs[i] += off_b * psi.amp[i + 1];
    }
    std::fill(dl.begin(), dl.end(), off_a);
    std::fill(du.begin(), du.end(), off_a);
    dmain = diag_a;
    lapack_int info = LAPACKE_zgtsv(
        LAPACK_COL_MAJOR, n, 1, reinterpret_cast<lapack_complex_double*>(dl.data()),
        reinterpret_cast<lapack_complex_double*>(dmain.data()),
        reinterpret_cast<lapack_complex_double*>(du.data()),
        reinterpret_cast<lapack_complex_double*>(rhs.data()), n);
    if (info != 0) throw UnstableStepError("zgtsv info=" + std::to_string(info));
    psi.amp = rhs;
    psi.time += dt;
  }
  return psi;
}

double continuity_residual(const Wavefunction1D& before, const Wavefunction1D& after,
                           double dt, int eta) {
  if (!(dt > 0.0)) throw std::invalid_argument("continuity_residual: dt must be > 0");
  const size_t n = before.q.size();
  if (after.q.size() != n || before.amp.size() != n || after.amp.size() != n ||
      std::abs(after.h - before.h) > 1e-14 * before.h)
    throw GridMismatchError("before/after wavefunctions on different grids");
  if (n < 5) throw GridMismatchError("grid too small for the divergence stencil");

  const double h = before.h;
  // midpoint field with Dirichlet zero-extension at the walls
  std::vector<std::complex<double>> mid(n + 2, 0.0);
  for (size_t i = 0; i < n; ++i) mid[i + 1] = 0.5 * (before.amp[i] + after.amp[i]);

  // j = (1/(i eta)) (psi* psi' - psi psi*') = (2/eta) Im(psi* psi'),
  // with units hbar = 2m = 1; central differences at grid points.
  std::vector<double> j(n + 2, 0.0);
  for (size_t k = 1; k <= n; ++k) {
    const std::complex<double> dpsi = (mid[k + 1] - mid[k - 1]) / (2.0 * h);
    j[k] = 2.0 / eta * std::imag(std::conj(mid[k]) * dpsi);
  }

  double worst = 0.0;
  for (size_t k = 2; k + 1 <= n; ++k) {
    const size_t i = k - 1;  // original grid index
    const double rho_rate =
        (std::norm(after.amp[i]) - std::norm(before.amp[i])) / dt;
    const double div_j = (j[k + 1] - j[k - 1]) / (2.0 * h);
    worst = std::max(worst, std::abs(rho_rate + div_j));
  }
  return worst;
}

double hermiticity_check(const EffectiveProblem1D& prob) {
  const int n = static_cast<int>(prob.q.size());
  const double inv_h2 = 1.0 / (prob.h * prob.h);
  // assemble row couplings independently and compare across the diagonal
  std::vector<double> lower(n, 0.0), upper(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (i > 0) lower[i] = -inv_h2 / prob.eta;
    if (i + 1 < n) upper[i] = -inv_h2 / prob.eta;
  }
  double worst = 0.0;
  for (int i = 0; i + 1 < n; ++i) worst = std::max(worst, std::abs(upper[i] - lower[i + 1]));
  return worst;
}

}  // namespace minksurf
