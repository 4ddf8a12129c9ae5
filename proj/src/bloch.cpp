#include "qfc/bloch.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qfc/error.hpp"
#include "qfc/logmath.hpp"
#include "qfc/simd/kernels.hpp"

namespace qfc::bloch {

namespace {

void check_spins(int n_spins, const char* where) {
  if (n_spins < 1 || n_spins > kMaxDenseSpins) {
    throw DomainError(std::string(where) + ": N = " + std::to_string(n_spins) +
                      " outside dense range [1, " + std::to_string(kMaxDenseSpins) + "]");
  }
}

// <n+1|J+|n> for |N/2, -N/2 + n>.
double raise_element(int n_spins, int n) {
  return std::sqrt(static_cast<double>(n + 1) * static_cast<double>(n_spins - n));
}

DickeVector raise(const DickeVector& v) {
  DickeVector out{v.n_spins, std::vector<std::complex<double>>(v.amps.size())};
  for (int n = 0; n < v.n_spins; ++n) out.amps[n + 1] = raise_element(v.n_spins, n) * v.amps[n];
  return out;
}

DickeVector lower(const DickeVector& v) {
  DickeVector out{v.n_spins, std::vector<std::complex<double>>(v.amps.size())};
  for (int n = 1; n <= v.n_spins; ++n) out.amps[n - 1] = raise_element(v.n_spins, n - 1) * v.amps[n];
  return out;
}

// exp(c L) v for a nilpotent ladder L; the series stops after N + 1 terms.
template <typename Ladder>
DickeVector exp_ladder(std::complex<double> c, const DickeVector& v, Ladder ladder) {
  DickeVector out = v;
  DickeVector term = v;
  for (int k = 1; k <= v.n_spins; ++k) {
    term = ladder(term);
    const std::complex<double> f = c / static_cast<double>(k);
    for (auto& a : term.amps) a *= f;
    for (std::size_t i = 0; i < out.amps.size(); ++i) out.amps[i] += term.amps[i];
  }
  return out;
}

}  // namespace

double DickeVector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  return acc;
}

DisentangleCoeffs disentangle(std::complex<double> eta, double t) {
  const double angle = std::abs(eta) * t;
  if (!(std::abs(angle) < 0.5 * std::numbers::pi)) {
    throw NumericalError("disentangle: |eta| t = " + std::to_string(angle) +
                         " reached the tan caustic at pi/2");
  }
  if (eta == 0.0) return {};
  const double tn = std::tan(angle);
  const std::complex<double> u = eta / std::abs(eta);  // sqrt(eta / conj(eta))
  constexpr std::complex<double> i{0.0, 1.0};
  DisentangleCoeffs c;
  c.s = -i * u * tn;
  c.s0 = -2.0 * std::log(std::cos(angle));
  c.s1 = -i * std::conj(u) * tn;
  return c;
}

DickeVector ground_state(int n_spins) {
  check_spins(n_spins, "ground_state");
  DickeVector v{n_spins, std::vector<std::complex<double>>(static_cast<std::size_t>(n_spins) + 1)};
  v.amps[0] = 1.0;
  return v;
}

DickeVector spin_coherent(int n_spins, std::complex<double> s) {
  check_spins(n_spins, "spin_coherent");
  const double r = std::abs(s);
  if (r == 0.0) return ground_state(n_spins);
  if (!std::isfinite(r)) throw DomainError("spin_coherent: s must be finite");
  // Each log-amplitude is <= 0, so terms are exponentiated independently.
  const double log_norm = -0.5 * n_spins * std::log1p(r * r);
  const double log_r = std::log(r);
  const double arg = std::arg(s);
  DickeVector v{n_spins, std::vector<std::complex<double>>(static_cast<std::size_t>(n_spins) + 1)};
  for (int n = 0; n <= n_spins; ++n) {
    const double l = 0.5 * logmath::log_choose(n_spins, n) + n * log_r + log_norm;
    v.amps[n] = std::polar(std::exp(l), n * arg);
  }
  return v;
}

std::complex<double> expect_jminus(const DickeVector& state) {
  const int n_spins = state.n_spins;
  if (n_spins < 1) return 0.0;
  std::vector<double> weights(static_cast<std::size_t>(n_spins));
  for (int n = 0; n < n_spins; ++n) weights[n] = raise_element(n_spins, n);
  // sum_n conj(a_n) a_{n+1} <n|J-|n+1>
  return simd::weighted_dot_conj(std::span(state.amps.data(), n_spins),
                                 std::span(state.amps.data() + 1, n_spins), weights);
}

DickeVector apply_jplus_n(const DickeVector& state, int k) {
  if (k < 0) throw DomainError("apply_jplus_n: negative power");
  DickeVector v = state;
  if (k > state.n_spins) {
    for (auto& a : v.amps) a = 0.0;
    return v;
  }
  for (int j = 0; j < k; ++j) v = raise(v);
  return v;
}

DickeVector apply_jminus_n(const DickeVector& state, int k) {
  if (k < 0) throw DomainError("apply_jminus_n: negative power");
  DickeVector v = state;
  if (k > state.n_spins) {
    for (auto& a : v.amps) a = 0.0;
    return v;
  }
  for (int j = 0; j < k; ++j) v = lower(v);
  return v;
}

DickeVector apply_disentangled(const DisentangleCoeffs& c, const DickeVector& state) {
  DickeVector v = exp_ladder(c.s1, state, lower);
  for (int n = 0; n <= v.n_spins; ++n) v.amps[n] *= std::exp(c.s0 * (n - 0.5 * v.n_spins));
  return exp_ladder(c.s, v, raise);
}

Eigen::MatrixXcd jplus_matrix(int n_spins) {
  check_spins(n_spins, "jplus_matrix");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_spins + 1, n_spins + 1);
  for (int n = 0; n < n_spins; ++n) m(n + 1, n) = raise_element(n_spins, n);
  return m;
}

Eigen::MatrixXcd jminus_matrix(int n_spins) { return jplus_matrix(n_spins).adjoint(); }

Eigen::MatrixXcd jz_matrix(int n_spins) {
  check_spins(n_spins, "jz_matrix");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_spins + 1, n_spins + 1);
  for (int n = 0; n <= n_spins; ++n) m(n, n) = n - 0.5 * n_spins;
  return m;
}

}  // namespace qfc::bloch
