#include "qfc/srs.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qfc/constants.hpp"
#include "qfc/error.hpp"

namespace qfc::srs {

namespace {

using constants::kSpeedOfLight;

// z-derivative state: a_P, a_S, w, Re rho01, Im rho01. Amplitudes stay real
// because the drive phase is carried entirely by rho01.
using State = std::array<double, 6>;  // a_P, a_S, w, Re rho01, Im rho01, phi

State derivative(const PropagationInputs& in, double z, const State& y) {
  const double ap = y[0];
  const double as = y[1];
  const std::complex<double> rho01{y[3], y[4]};
  const std::complex<double> phase = std::polar(1.0, in.delta_beta * z);
  const MolecularRate r =
      molecular_rhs({y[2], rho01}, in.g_s * ap * as * phase, in.damping_gamma);
  const double x = std::imag(rho01 * phase);
  const double k = in.collective_coupling / kSpeedOfLight;
  return {-k * x * as,
          k * x * ap,
          r.dw / kSpeedOfLight,
          r.drho01.real() / kSpeedOfLight,
          r.drho01.imag() / kSpeedOfLight,
          in.g_s * ap * as / kSpeedOfLight};
}

State axpy(const State& y, double h, const State& k) {
  State out;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + h * k[i];
  return out;
}

bool finite(const State& y) {
  for (double v : y) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

MolecularRate molecular_rhs(const MolecularState& s, std::complex<double> drive, double gamma) {
  constexpr std::complex<double> i{0.0, 1.0};
  const std::complex<double> rho10 = std::conj(s.rho01);
  MolecularRate r;
  r.dw = std::real(-2.0 * i * (s.rho01 * drive - rho10 * std::conj(drive)));
  r.drho01 = -i * s.w * std::conj(drive) - gamma * s.rho01;
  return r;
}

double collective_coupling(const params::DerivedParams& d, const params::ExperimentConfig& cfg) {
  if (d.g_s < 0 || d.alpha_p0 <= 0) {
    throw DomainError("collective_coupling: need G_S >= 0 and a_P0 > 0");
  }
  if (d.g_s == 0) return 0.0;
  const double intensity = cfg.pulse_energy / (cfg.pulse_width * cfg.mode_area_lp01);
  const double kappa = 0.5 * cfg.gain_pump_stokes * intensity * kSpeedOfLight;  // 1/s
  return kappa * (kappa + cfg.damping_gamma) / (d.g_s * d.alpha_p0 * d.alpha_p0);
}

PropagationInputs make_inputs(const params::DerivedParams& d, const params::ExperimentConfig& cfg) {
  PropagationInputs in;
  in.g_s = d.g_s;
  in.collective_coupling = collective_coupling(d, cfg);
  in.n_molecules = d.n_molecules;
  in.alpha_p0 = d.alpha_p0;
  in.alpha_s0 = cfg.stokes_seed;
  in.damping_gamma = cfg.damping_gamma;
  in.delta_beta = cfg.delta_beta;
  in.fiber_length = cfg.fiber_length;
  return in;
}

FieldProfile propagate(const PropagationInputs& in, std::size_t n_steps) {
  if (n_steps < kMinSteps) {
    throw DomainError("propagate: n_steps must be at least " + std::to_string(kMinSteps) +
                      ", got " + std::to_string(n_steps));
  }
  if (!(in.fiber_length > 0)) throw DomainError("propagate: fiber_length must be positive");

  const double h = in.fiber_length / static_cast<double>(n_steps);
  FieldProfile p;
  p.alpha_p0 = in.alpha_p0;
  p.alpha_s0 = in.alpha_s0;
  p.n_molecules = in.n_molecules;
  p.delta_beta = in.delta_beta;
  const std::size_t n = n_steps + 1;
  p.z.resize(n);
  p.alpha_p.resize(n);
  p.alpha_s.resize(n);
  p.phi.resize(n);
  p.xi_eom.resize(n);
  p.inversion.resize(n);
  p.rho01.resize(n);

  State y{in.alpha_p0, in.alpha_s0, -1.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0;; ++k) {
    const double z = static_cast<double>(k) * h;
    p.z[k] = z;
    p.alpha_p[k] = std::abs(y[0]);
    p.alpha_s[k] = std::abs(y[1]);
    p.inversion[k] = y[2];
    p.rho01[k] = {y[3], y[4]};
    p.xi_eom[k] = in.n_molecules * std::abs(p.rho01[k]);
    p.phi[k] = y[5];
    if (k == n_steps) break;

    const State k1 = derivative(in, z, y);
    const State k2 = derivative(in, z + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = derivative(in, z + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = derivative(in, z + h, axpy(y, h, k3));
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if (!finite(y)) {
      throw NumericalError("propagate: non-finite state at z = " + std::to_string(z + h) + " m");
    }
  }
  p.xi_analytic = coherence_xi(p).abs;
  return p;
}

FieldProfile propagate_fields(const params::DerivedParams& d, const params::ExperimentConfig& cfg,
                              std::size_t n_steps) {
  return propagate(make_inputs(d, cfg), n_steps);
}

CoherenceXi coherence_xi(const FieldProfile& profile) {
  if (profile.phi.size() != profile.z.size()) {
    throw DomainError("coherence_xi: z and phi lengths differ");
  }
  CoherenceXi xi;
  xi.abs.resize(profile.z.size());
  xi.phase.resize(profile.z.size());
  for (std::size_t k = 0; k < profile.z.size(); ++k) {
    xi.abs[k] = 0.5 * profile.n_molecules * std::abs(std::sin(2.0 * profile.phi[k]));
    xi.phase[k] = profile.delta_beta * profile.z[k] - 0.5 * std::numbers::pi;
  }
  return xi;
}

double conversion_angle_bound(const PropagationInputs& in, double g_u, double z) {
  using constants::kSpeedOfLight;
  // |rho01| grows no faster than |drive| <= G_S (a_P^2 + a_S^2) / 2 and never
  // exceeds 1/2, so |xi| <= min(K t, N/2).
  const double t = z / kSpeedOfLight;
  const double amp2 = in.alpha_p0 * in.alpha_p0 + in.alpha_s0 * in.alpha_s0;
  const double k = 0.5 * in.n_molecules * in.g_s * amp2;
  if (k == 0.0) return 0.0;
  const double t_sat = 0.5 * in.n_molecules / k;
  const double integral = t <= t_sat ? 0.5 * k * t * t
                                     : 0.5 * k * t_sat * t_sat + 0.5 * in.n_molecules * (t - t_sat);
  return g_u * integral;
}

}  // namespace qfc::srs
