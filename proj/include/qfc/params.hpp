#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace qfc::params {

/// Raw physical inputs of one experiment, SI units throughout.
///
/// Optical frequencies are ordinary frequencies (Hz). The Raman shift is the
/// one angular quantity; it is converted once, in `parse_config`.
struct ExperimentConfig {
  double pressure = 0;          // Pa
  double temperature = 0;       // K
  double pulse_energy = 0;      // J
  double pulse_width = 0;       // s
  double fiber_length = 0;      // m
  double fiber_diameter = 0;    // m
  double fiber_area_total = 0;  // m^2
  double fiber_volume = 0;      // m^3
  double mode_area_lp01 = 0;    // m^2
  double raman_shift = 0;       // rad/s
  double t2 = 0;                // s
  double damping_gamma = 0;     // 1/s
  double freq_pump = 0;         // Hz
  double freq_stokes = 0;
  double freq_mixing = 0;
  double freq_up = 0;
  double gain_pump_stokes = 0;  // m/W
  double gain_mixing_up = 0;    // m/W
  double delta_beta = 0;        // 1/m
  double stokes_seed = 1.0;     // initial Stokes coherent amplitude

  bool operator==(const ExperimentConfig&) const = default;
};

/// Constants computed from an ExperimentConfig.
struct DerivedParams {
  double n_molecules = 0;     // N
  double number_density = 0;  // 1/m^3
  double quant_volume = 0;    // m^3
  double kappa1_p = 0;        // m^2 C^2 J^-2 s^-1 (negative)
  double kappa1_u = 0;
  double g_s = 0;             // rad/s
  double g_u = 0;
  double alpha_p0 = 0;        // initial pump coherent amplitude
  double n_photons = 0;

  bool operator==(const DerivedParams&) const = default;
};

/// Throws ConfigError naming the first violated invariant.
void validate(const ExperimentConfig& cfg);

/// Parses the flat `key = value` format. `source` only labels error messages.
ExperimentConfig parse_config(std::string_view text, std::string_view source = "<string>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config; values are written with round-trip precision.
std::string to_config_text(const ExperimentConfig& cfg);

double molecule_count(double pressure, double volume, double temperature);
double quantization_volume(double pulse_width, double fiber_area_total);

/// Phenomenological coupling from a Raman gain coefficient. `omega_lower` is
/// the angular frequency of the lower-frequency partner (Stokes or mixing).
double coupling_from_gain(double gain, double damping_gamma, double number_density,
                          double omega_lower);

/// Interaction strength G (rad/s) for a coupling and two ordinary frequencies.
double interaction_strength(double kappa1, double nu_a, double nu_b, double quant_volume);

DerivedParams derive_params(const ExperimentConfig& cfg);

/// Vacuum wavelength for display; the config carries frequencies only.
double wavelength(double nu);

}  // namespace qfc::params
