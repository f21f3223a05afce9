#pragma once

#include <complex>
#include <vector>

#include "minksurf/revolution.hpp"

namespace minksurf {

// Finite-difference solution of the reduced 1D eigenproblems, exact
// reference spectra, and a norm-conserving implicit-midpoint propagator.
//
// Discretization: 3-point central differences on the uniform interior grid,
// giving a real symmetric tridiagonal operator T = -(1/eta) D2 + diag(V).
// For eta = -1 the solver works on the sign-flipped operator -T (so the
// matrix handed to the eigensolver is always D2-positive) and negates the
// reported eigenvalues back to the physical side; the physical spectrum is
// then unbounded below and only the requested finite window is reported.

enum class SpectrumKind { BoundStates, Window };

struct Spectrum {
  std::vector<double> eigenvalues;                // ascending, physical sign
  std::vector<std::vector<double>> eigenvectors;  // L2-normalized grid samples
  SpectrumKind kind{SpectrumKind::BoundStates};
  double window_lo{0.0}, window_hi{0.0};          // for kind == Window
  int requested{0};
  int found{0};
};

// Lowest discrete states below the continuum edge (the lim inf of V_eff at
// infinity-truncating walls, minus ten times the box resolution (pi/(b-a))^2
// so the discretized continuum is never misreported as bound). An empty
// spectrum is a valid result, not an error.
Spectrum solve_bound_states(const EffectiveProblem1D& prob, int max_states);

// All eigenvalues in the physical window [lo, hi] (at most max_states).
Spectrum solve_window(const EffectiveProblem1D& prob, double lo, double hi,
                      int max_states);

// Exact Poschl-Teller spectrum of the one-sheeted hyperboloid:
// { (n-|ell|)(n-|ell|+1)/R^2 : integer n, 0 <= n < |ell|-1/2 }, ascending.
// Empty for |ell| <= 1/2.
std::vector<double> poschl_teller_exact(double R, double ell);

// Euclidean sphere reference: { n(n+1)/R^2 : |ell| <= n <= n_max }.
std::vector<double> sphere_reference_exact(double R, int ell, int n_max);

// Effective 1D dynamics on the Euclidean sphere,
// -psi'' + [-1/(4R^2) + (ell^2 - 1/4) csc^2(s/R)/R^2] psi = E psi
// on s in (0, pi R). The ell = 0 channel has a negative singular csc^2
// coefficient at the poles and is rejected as SingularChannel.
Spectrum sphere_effective_solve(double R, int ell, int max_states,
                                int n_grid = 20000);

struct BoxSpec {
  double a{1.0}, b{1.0}, c{1.0};  // side lengths, > 0
  int n1{1}, n2{1}, n3{1};        // mode numbers, >= 1
};

// E = pi^2 (-n1^2/a^2 + n2^2/b^2 + n3^2/c^2) in internal units.
double box_spectrum(const BoxSpec& spec);

struct Wavefunction1D {
  std::vector<double> q;                   // grid (matches a problem's grid)
  double h{0.0};
  std::vector<std::complex<double>> amp;
  double time{0.0};

  double norm() const;  // sum |amp|^2 h
};

// Normalized Gaussian packet exp(-(q-center)^2/(4 width^2) + i k0 q) on the
// problem's grid.
Wavefunction1D gaussian_packet(const EffectiveProblem1D& prob, double center,
                               double width, double k0);

Wavefunction1D stationary_state(const EffectiveProblem1D& prob,
                                const std::vector<double>& eigenvector);

// Implicit midpoint (Cayley) propagation of i d/dt psi = H psi with
// H = -(1/eta) D2 + V: unitary, time-reversible, second order. Norm is
// conserved to linear-solve roundoff regardless of dt.
Wavefunction1D propagate(const EffectiveProblem1D& prob,
                         const Wavefunction1D& psi0, double dt, int steps);

// Max-norm residual of the discrete continuity equation
//   (rho_after - rho_before)/dt + div j = 0,
// with j = (1/(i eta))(psi* dpsi - psi dpsi*) evaluated by central
// differences at the midpoint (psi_before + psi_after)/2. The divergence is
// O(dt^2 + h^2) for propagated pairs.
double continuity_residual(const Wavefunction1D& before,
                           const Wavefunction1D& after, double dt,
                           int eta = +1);

// Max |H_ij - H_ji| over the assembled discrete Hamiltonian; zero by
// construction (symmetric assembly), so all eigenvalues are real.
double hermiticity_check(const EffectiveProblem1D& prob);

}  // namespace minksurf
