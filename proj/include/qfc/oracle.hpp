#pragma once

#include <complex>

#include "qfc/conversion.hpp"

namespace qfc::oracle {

inline constexpr long kMaxExactSpins = 1'000'000;
inline constexpr double kTruncation = 1e-18;

/// Entries of the idler-mixing and idler-up reduced matrices after exact
/// evolution of the Bell state against a spin coherent molecular ensemble:
/// x = <11|rho_IM|11>, w = <11|rho_IM|00>, y = <11|rho_IU|00>.
struct ReducedCoefficients {
  double x = 0.5;
  std::complex<double> w{0.5, 0.0};
  std::complex<double> y{0.0, 0.0};
};

struct SumOptions {
  /// Drop binomial terms below kTruncation times the peak term.
  bool truncate = true;
};

/// Binomial-weighted closed sums over Dicke levels. 1 <= N <= kMaxExactSpins.
ReducedCoefficients exact_coefficients(long n_spins, std::complex<double> s, double g_u, double t,
                                       SumOptions opts = {});

/// Independent route: dense spin coherent state, each single-excitation
/// doublet propagated by a 2x2 matrix exponential, then an explicit partial
/// trace. `g_u_scale` multiplies G_U on this route only (fault injection).
ReducedCoefficients brute_force_coefficients(int n_spins, std::complex<double> s, double g_u,
                                             double t, double g_u_scale = 1.0);

conversion::TwoQubitDensity rho_idler_mixing(const ReducedCoefficients& c);
conversion::TwoQubitDensity rho_idler_up(const ReducedCoefficients& c);

/// Semiclassical angle G_U |xi| t with |xi| = N |s| / (1 + |s|^2).
double semiclassical_angle(long n_spins, std::complex<double> s, double g_u, double t);

/// t such that semiclassical_angle(N, s, g_u, t) = theta_sc.
double time_for_angle(long n_spins, std::complex<double> s, double g_u, double theta_sc);

double semiclassical_w(long n_spins, std::complex<double> s, double g_u, double t);

/// |w_exact - w_sc|.
double semiclassical_gap(long n_spins, std::complex<double> s, double g_u, double t);

/// Leading finite-N term of w_exact - w_sc (signed), from a second-order
/// moment expansion of the binomial sum about its mean. With
/// psi = atan|s|, a = G_U t, theta = theta_sc:
///   (a/8) [ -(a N / 2) cos^2(2 psi) cos(theta) + (1/sin(2 psi) - 2 tan(psi)) sin(theta) ]
/// Throws NumericalError at the poles sin(2 psi) = 0.
double first_order_correction(long n_spins, std::complex<double> s, double g_u, double t);

}  // namespace qfc::oracle
