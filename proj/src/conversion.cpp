#include "qfc/conversion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qfc/constants.hpp"
#include "qfc/error.hpp"

namespace qfc::conversion {

namespace {

constexpr double kNormTolerance = 1e-9;
constexpr double kPsdTolerance = 1e-10;

void check_normalized(const ThreeModePureState& s, const char* where) {
  const double norm = std::norm(s.c000) + std::norm(s.c110) + std::norm(s.c101);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw DomainError(std::string(where) + ": state norm " + std::to_string(norm) + " != 1");
  }
}

// Pure-state reduction: both partners share the idler and the vacuum branch.
TwoQubitDensity reduce(std::complex<double> c000, std::complex<double> kept,
                       std::complex<double> traced) {
  TwoQubitDensity rho = TwoQubitDensity::Zero();
  rho(0, 0) = std::norm(c000);
  rho(3, 3) = std::norm(kept);
  rho(2, 2) = std::norm(traced);
  rho(3, 0) = kept * std::conj(c000);
  rho(0, 3) = std::conj(rho(3, 0));
  return rho;
}

std::size_t argmin_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  std::size_t best = 0;
  double best_v = std::abs(a[0] - b[0]);
  for (std::size_t k = 1; k < a.size(); ++k) {
    const double v = std::abs(a[k] - b[k]);
    if (v < best_v) {
      best_v = v;
      best = k;
    }
  }
  return best;
}

}  // namespace

ThreeModePureState initial_bell_state() {
  const double r = std::numbers::sqrt2 / 2.0;
  return {r, r, 0.0};
}

ThreeModePureState evolve_bell(double theta, double conv_phase) {
  if (!(theta >= 0.0)) throw DomainError("evolve_bell: theta must be >= 0");
  const double r = std::numbers::sqrt2 / 2.0;
  return {r, r * std::cos(theta), std::polar(r * std::sin(theta), conv_phase)};
}

PhotonNumbers photon_numbers(const ThreeModePureState& s) {
  check_normalized(s, "photon_numbers");
  const double n_m = std::norm(s.c110);
  const double n_u = std::norm(s.c101);
  return {n_m + n_u, n_m, n_u};
}

TwoQubitDensity reduce_idler_mixing(const ThreeModePureState& s) {
  return reduce(s.c000, s.c110, s.c101);
}

TwoQubitDensity reduce_idler_up(const ThreeModePureState& s) {
  return reduce(s.c000, s.c101, s.c110);
}

TwoQubitDensity x_state(double x, std::complex<double> coherence) {
  TwoQubitDensity rho = TwoQubitDensity::Zero();
  rho(0, 0) = 0.5;
  rho(3, 3) = x;
  rho(2, 2) = 0.5 - x;
  rho(3, 0) = coherence;
  rho(0, 3) = std::conj(coherence);
  return rho;
}

double wootters_concurrence(const TwoQubitDensity& rho_in) {
  const TwoQubitDensity rho = 0.5 * (rho_in + rho_in.adjoint());
  const double trace = rho.trace().real();

  Eigen::SelfAdjointEigenSolver<TwoQubitDensity> es(rho);
  if (es.info() != Eigen::Success) throw NumericalError("wootters_concurrence: eigensolver failed");
  Eigen::Vector4d ev = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (ev(i) < -kPsdTolerance) {
      throw NumericalError("wootters_concurrence: rho has eigenvalue " + std::to_string(ev(i)));
    }
    if (ev(i) < 1e-14 * trace) ev(i) = 0.0;
  }
  const TwoQubitDensity sqrt_rho =
      es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();

  // sigma_y (x) sigma_y is the antidiagonal (-1, 1, 1, -1) in this basis.
  TwoQubitDensity flip = TwoQubitDensity::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const TwoQubitDensity rho_tilde = flip * rho.conjugate() * flip;

  TwoQubitDensity r = sqrt_rho * rho_tilde * sqrt_rho;
  r = 0.5 * (r + r.adjoint());
  Eigen::SelfAdjointEigenSolver<TwoQubitDensity> er(r, Eigen::EigenvaluesOnly);
  if (er.info() != Eigen::Success) throw NumericalError("wootters_concurrence: eigensolver failed");
  // Eigenvalues within rounding of zero would otherwise surface as ~1e-8
  // after the square root; they are zeroed against a relative floor.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max(er.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) {
    const double e = er.eigenvalues()(i);
    if (e < -kPsdTolerance) {
      throw NumericalError("wootters_concurrence: rho rho~ has eigenvalue " + std::to_string(e));
    }
    lambda[i] = e > floor ? std::sqrt(e) : 0.0;
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

ConcurrencePair concurrence_closed_form(double theta) {
  return {std::abs(std::cos(theta)), std::abs(std::sin(theta))};
}

double entanglement_of_formation(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw DomainError("entanglement_of_formation: concurrence " + std::to_string(c) +
                      " outside [0, 1]");
  }
  const double tau = std::sqrt(std::max(0.0, 1.0 - c * c));
  const auto xlog2x = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
  return 1.0 - 0.5 * (xlog2x(1.0 + tau) + xlog2x(1.0 - tau));
}

ConversionTrace conversion_trace(const std::vector<double>& z, const std::vector<double>& xi_abs,
                                 double g_u) {
  if (z.size() != xi_abs.size()) throw DomainError("conversion_trace: z and xi lengths differ");
  if (z.empty()) throw DomainError("conversion_trace: empty profile");
  const std::size_t n = z.size();
  ConversionTrace tr;
  tr.z = z;
  tr.theta.resize(n);
  tr.n_i.resize(n);
  tr.n_m.resize(n);
  tr.n_u.resize(n);
  tr.c_im.resize(n);
  tr.c_iu.resize(n);
  tr.eof_im.resize(n);
  tr.eof_iu.resize(n);

  double theta = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      theta += g_u * 0.5 * (xi_abs[k - 1] + xi_abs[k]) * (z[k] - z[k - 1]) / constants::kSpeedOfLight;
    }
    tr.theta[k] = theta;
    const PhotonNumbers pn = photon_numbers(evolve_bell(theta));
    const ConcurrencePair cc = concurrence_closed_form(theta);
    tr.n_i[k] = pn.n_i;
    tr.n_m[k] = pn.n_m;
    tr.n_u[k] = pn.n_u;
    tr.c_im[k] = cc.c_im;
    tr.c_iu[k] = cc.c_iu;
    tr.eof_im[k] = entanglement_of_formation(std::min(cc.c_im, 1.0));
    tr.eof_iu[k] = entanglement_of_formation(std::min(cc.c_iu, 1.0));
  }
  return tr;
}

ConversionTrace conversion_trace(const srs::FieldProfile& profile, const params::DerivedParams& d,
                                 srs::XiMode mode) {
  return conversion_trace(profile.z, profile.xi_abs(mode), d.g_u);
}

std::size_t crossing_index(const ConversionTrace& trace) {
  if (trace.size() == 0) throw DomainError("crossing_index: empty trace");
  return argmin_abs_diff(trace.n_m, trace.n_u);
}

std::size_t concurrence_crossing_index(const ConversionTrace& trace) {
  if (trace.size() == 0) throw DomainError("concurrence_crossing_index: empty trace");
  return argmin_abs_diff(trace.c_im, trace.c_iu);
}

}  // namespace qfc::conversion
