#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qfc/params.hpp"

namespace qfc::srs {

inline constexpr std::size_t kDefaultSteps = 4000;
inline constexpr std::size_t kMinSteps = 100;

/// Single-molecule two-level state in the rotating frame. w = rho11 - rho00.
struct MolecularState {
  double w = -1.0;
  std::complex<double> rho01{0.0, 0.0};
};

struct MolecularRate {
  double dw = 0.0;
  std::complex<double> drho01{0.0, 0.0};
};

/// Time derivative of the molecular state under the semiclassical Raman
/// drive `drive` = G_S a_P a_S e^{i dbeta z} (rad/s) with dephasing `gamma`
/// acting on the coherence only.
MolecularRate molecular_rhs(const MolecularState& state, std::complex<double> drive, double gamma);

/// Which coherence amplitude the conversion stage is driven by.
enum class XiMode {
  Eom,       ///< N |rho01(z)| from the damped molecular equations
  Analytic,  ///< (N/2) |sin 2 phi(z)| from the undamped spin coherent state
};

/// Everything the field integrator needs. Separated from the config so tests
/// can switch individual couplings off.
struct PropagationInputs {
  double g_s = 0;                  // rad/s
  double collective_coupling = 0;  // rad/s, field back-action strength
  double n_molecules = 0;
  double alpha_p0 = 0;
  double alpha_s0 = 1.0;
  double damping_gamma = 0;        // 1/s
  double delta_beta = 0;           // 1/m
  double fiber_length = 0;         // m
};

/// Pump/Stokes/coherence profile along the fiber on a uniform z grid.
struct FieldProfile {
  std::vector<double> z;          // m
  std::vector<double> alpha_p;    // |alpha_P|
  std::vector<double> alpha_s;    // |alpha_S|
  std::vector<double> phi;        // accumulated drive phase, rad
  std::vector<double> xi_eom;     // N |rho01|
  std::vector<double> xi_analytic;  // (N/2) |sin 2 phi|
  std::vector<double> inversion;  // w
  std::vector<std::complex<double>> rho01;
  double alpha_p0 = 0;
  double alpha_s0 = 0;
  double n_molecules = 0;
  double delta_beta = 0;

  std::size_t size() const { return z.size(); }
  const std::vector<double>& xi_abs(XiMode mode) const {
    return mode == XiMode::Eom ? xi_eom : xi_analytic;
  }
};

/// Collective coupling g in  a_S' = -(g/c) Im(rho10 e^{-i dbeta z}) a_P.
///
/// Chosen so that the linear growth rate of the Stokes amplitude in the
/// integrated model equals half the tabulated intensity gain, gain * I_P,
/// with I_P = E_pulse / (T_width * A_LP01). The growth rate kappa of the
/// linearised system obeys kappa (kappa + Gamma) = g G_S a_P0^2, which is
/// inverted here.
double collective_coupling(const params::DerivedParams& d, const params::ExperimentConfig& cfg);

PropagationInputs make_inputs(const params::DerivedParams& d, const params::ExperimentConfig& cfg);

/// Fixed-step RK4 in z (t = z/c). Throws DomainError for n_steps < 100 and
/// NumericalError if the state stops being finite.
FieldProfile propagate(const PropagationInputs& in, std::size_t n_steps = kDefaultSteps);

FieldProfile propagate_fields(const params::DerivedParams& d, const params::ExperimentConfig& cfg,
                              std::size_t n_steps = kDefaultSteps);

struct CoherenceXi {
  std::vector<double> abs;    // |xi|
  std::vector<double> phase;  // arg xi
};

/// Spin-coherent-state coherence (N/2) |sin 2 phi| with phase dbeta z - pi/2,
/// from a profile whose z and phi arrays are populated.
CoherenceXi coherence_xi(const FieldProfile& profile);

/// Upper bound on the conversion angle G_U int |xi| dt reachable by z for any
/// field closure conserving a_P^2 + a_S^2 = a_P0^2 + a_S0^2.
double conversion_angle_bound(const PropagationInputs& in, double g_u, double z);

}  // namespace qfc::srs
