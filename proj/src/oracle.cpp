#include "qfc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "qfc/bloch.hpp"
#include "qfc/error.hpp"
#include "qfc/logmath.hpp"
#include "qfc/simd/kernels.hpp"

namespace qfc::oracle {

namespace {

void check_exact_range(long n_spins) {
  if (n_spins < 1 || n_spins > kMaxExactSpins) {
    throw DomainError("exact_coefficients: N = " + std::to_string(n_spins) + " outside [1, " +
                      std::to_string(kMaxExactSpins) + "]");
  }
}

// Normalized binomial weights C(N,n) p^n q^(N-n) on a window [lo, hi].
struct Weights {
  long lo = 0;
  std::vector<double> p;
};

Weights binomial_weights(long n_spins, double r2, bool truncate) {
  const double log_r2 = std::log(r2);
  const double p = r2 / (1.0 + r2);
  const long peak = std::clamp(std::lround(p * static_cast<double>(n_spins)), 0L, n_spins);
  const double log_peak =
      logmath::log_choose(n_spins, peak) + peak * log_r2 - n_spins * std::log1p(r2);
  const double floor = truncate ? std::log(kTruncation) : -INFINITY;

  // Log weights relative to the peak, by recurrence outward.
  std::vector<double> up{0.0};
  for (long n = peak; n < n_spins; ++n) {
    const double l = up.back() + std::log(static_cast<double>(n_spins - n) / (n + 1)) + log_r2;
    if (l < floor) break;
    up.push_back(l);
  }
  std::vector<double> down;
  double l = 0.0;
  for (long n = peak; n > 0; --n) {
    l += std::log(static_cast<double>(n) / (n_spins - n + 1)) - log_r2;
    if (l < floor) break;
    down.push_back(l);
  }

  Weights w;
  w.lo = peak - static_cast<long>(down.size());
  w.p.reserve(down.size() + up.size());
  for (auto it = down.rbegin(); it != down.rend(); ++it) w.p.push_back(std::exp(log_peak + *it));
  for (double u : up) w.p.push_back(std::exp(log_peak + u));
  double total = 0.0;
  for (double v : w.p) total += v;
  for (double& v : w.p) v /= total;
  return w;
}

}  // namespace

ReducedCoefficients exact_coefficients(long n_spins, std::complex<double> s, double g_u, double t,
                                       SumOptions opts) {
  check_exact_range(n_spins);
  const double r2 = std::norm(s);
  if (r2 == 0.0 || g_u * t == 0.0) return {};
  if (!std::isfinite(r2)) throw DomainError("exact_coefficients: s must be finite");

  const double a = g_u * t;
  const Weights wt = binomial_weights(n_spins, r2, opts.truncate);
  const std::size_t len = wt.p.size();
  const double nn = static_cast<double>(n_spins);

  // Level n couples through sqrt(n (N - n + 1)); the y sum is indexed by the
  // lower level m = n - 1 and carries the extra ratio sqrt((N - m)/(m + 1)).
  std::vector<double> cos_n(len), cos2_n(len), y_terms(len);
  for (std::size_t i = 0; i < len; ++i) {
    const double n = static_cast<double>(wt.lo + static_cast<long>(i));
    const double phase = a * std::sqrt(n * (nn - n + 1.0));
    cos_n[i] = std::cos(phase);
    cos2_n[i] = cos_n[i] * cos_n[i];
    y_terms[i] = n < nn ? std::sqrt((nn - n) / (n + 1.0)) * std::sin(a * std::sqrt((n + 1.0) * (nn - n)))
                        : 0.0;
  }

  ReducedCoefficients c;
  c.x = 0.5 * simd::dot(wt.p, cos2_n);
  c.w = 0.5 * simd::dot(wt.p, cos_n);
  c.y = std::complex<double>(0.0, -0.5) * s * simd::dot(wt.p, y_terms);
  return c;
}

ReducedCoefficients brute_force_coefficients(int n_spins, std::complex<double> s, double g_u,
                                             double t, double g_u_scale) {
  if (n_spins < 1 || n_spins > bloch::kMaxDenseSpins) {
    throw DomainError("brute_force_coefficients: N = " + std::to_string(n_spins) +
                      " outside dense range [1, " + std::to_string(bloch::kMaxDenseSpins) + "]");
  }
  const bloch::DickeVector mol = bloch::spin_coherent(n_spins, s);
  const std::size_t levels = static_cast<std::size_t>(n_spins) + 1;
  const double gu = g_u * g_u_scale;
  const double r = 1.0 / std::sqrt(2.0);

  // psi[idler][mixing][up][n]
  using Amp = std::complex<double>;
  std::array<std::array<std::array<std::vector<Amp>, 2>, 2>, 2> psi;
  for (auto& a : psi)
    for (auto& b : a)
      for (auto& c : b) c.assign(levels, Amp{});

  for (std::size_t n = 0; n < levels; ++n) {
    psi[0][0][0][n] = r * mol.amps[n];
    if (n == 0) {
      psi[1][1][0][0] += r * mol.amps[0];
      continue;
    }
    // Doublet (|1,1,0>|n>, |1,0,1>|n-1>) with coupling <n-1|J-|n>.
    const double coupling = gu * std::sqrt(static_cast<double>(n) * (n_spins - n + 1.0));
    Eigen::Matrix2cd h;
    h << 0.0, coupling, coupling, 0.0;
    const Eigen::Matrix2cd u = (Amp(0.0, -t) * h).exp();
    psi[1][1][0][n] += r * u(0, 0) * mol.amps[n];
    psi[1][0][1][n - 1] += r * u(1, 0) * mol.amps[n];
  }

  // rho_AB[(i,j),(k,l)] tracing the remaining photon mode and the molecules.
  const auto trace_im = [&](int i, int m, int i2, int m2) {
    Amp acc{};
    for (int u = 0; u < 2; ++u)
      for (std::size_t n = 0; n < levels; ++n) acc += psi[i][m][u][n] * std::conj(psi[i2][m2][u][n]);
    return acc;
  };
  const auto trace_iu = [&](int i, int u, int i2, int u2) {
    Amp acc{};
    for (int m = 0; m < 2; ++m)
      for (std::size_t n = 0; n < levels; ++n) acc += psi[i][m][u][n] * std::conj(psi[i2][m][u2][n]);
    return acc;
  };

  ReducedCoefficients c;
  c.x = trace_im(1, 1, 1, 1).real();
  c.w = trace_im(1, 1, 0, 0);
  c.y = trace_iu(1, 1, 0, 0);
  return c;
}

conversion::TwoQubitDensity rho_idler_mixing(const ReducedCoefficients& c) {
  return conversion::x_state(c.x, c.w);
}

conversion::TwoQubitDensity rho_idler_up(const ReducedCoefficients& c) {
  return conversion::x_state(0.5 - c.x, c.y);
}

double semiclassical_angle(long n_spins, std::complex<double> s, double g_u, double t) {
  const double r = std::abs(s);
  return g_u * t * static_cast<double>(n_spins) * r / (1.0 + r * r);
}

double time_for_angle(long n_spins, std::complex<double> s, double g_u, double theta_sc) {
  const double per_t = semiclassical_angle(n_spins, s, g_u, 1.0);
  if (!(per_t > 0.0)) throw DomainError("time_for_angle: zero coherence cannot reach an angle");
  return theta_sc / per_t;
}

double semiclassical_w(long n_spins, std::complex<double> s, double g_u, double t) {
  return 0.5 * std::cos(semiclassical_angle(n_spins, s, g_u, t));
}

double semiclassical_gap(long n_spins, std::complex<double> s, double g_u, double t) {
  const ReducedCoefficients c = exact_coefficients(n_spins, s, g_u, t);
  return std::abs(c.w.real() - semiclassical_w(n_spins, s, g_u, t));
}

double first_order_correction(long n_spins, std::complex<double> s, double g_u, double t) {
  const double psi = std::atan(std::abs(s));
  const double sin2 = std::sin(2.0 * psi);
  const double cos1 = std::cos(psi);
  if (sin2 < 1e-12 || cos1 < 1e-12) {
    throw NumericalError("first_order_correction: pole at sin(2 atan|s|) = 0, |s| = " +
                         std::to_string(std::abs(s)));
  }
  const double a = g_u * t;
  const double theta = semiclassical_angle(n_spins, s, g_u, t);
  const double cos2 = std::cos(2.0 * psi);
  return a / 8.0 *
         (-(0.5 * a * static_cast<double>(n_spins)) * cos2 * cos2 * std::cos(theta) +
          (1.0 / sin2 - 2.0 * std::tan(psi)) * std::sin(theta));
}

}  // namespace qfc::oracle
