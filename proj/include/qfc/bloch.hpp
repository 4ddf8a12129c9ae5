#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qfc::bloch {

inline constexpr int kMaxDenseSpins = 4096;

/// Symmetric Dicke state: amps[n] multiplies |N/2, -N/2 + n>, n = 0..N.
struct DickeVector {
  int n_spins = 0;
  std::vector<std::complex<double>> amps;

  double norm_squared() const;
};

/// Coefficients of exp(s J+) exp(s0 Jz) exp(s1 J-).
/// Invariants: exp(-s0) (1 + |s|^2) = 1 and |s1| = |s|.
struct DisentangleCoeffs {
  std::complex<double> s{0.0, 0.0};
  double s0 = 0.0;
  std::complex<double> s1{0.0, 0.0};
};

/// Disentangles exp(-i t (eta J+ + conj(eta) J-)). Throws NumericalError at
/// the tan caustic |eta| t >= pi/2.
DisentangleCoeffs disentangle(std::complex<double> eta, double t);

DickeVector ground_state(int n_spins);

/// Normalized spin coherent state with amps[n] ~ sqrt(C(N, n)) s^n.
/// Throws DomainError unless 1 <= N <= kMaxDenseSpins.
DickeVector spin_coherent(int n_spins, std::complex<double> s);

/// <J->.
std::complex<double> expect_jminus(const DickeVector& state);

/// (J+)^k applied to `state`, unnormalized. k > N gives the zero vector.
DickeVector apply_jplus_n(const DickeVector& state, int k);
DickeVector apply_jminus_n(const DickeVector& state, int k);

/// exp(s J+) exp(s0 Jz) exp(s1 J-) applied to `state` by terminating series.
DickeVector apply_disentangled(const DisentangleCoeffs& c, const DickeVector& state);

Eigen::MatrixXcd jplus_matrix(int n_spins);
Eigen::MatrixXcd jminus_matrix(int n_spins);
Eigen::MatrixXcd jz_matrix(int n_spins);

}  // namespace qfc::bloch
