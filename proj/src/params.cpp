#include "qfc/params.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qfc/constants.hpp"
#include "qfc/error.hpp"

namespace qfc::params {

namespace {

using constants::kTwoPi;

struct KeySpec {
  const char* name;
  double ExperimentConfig::*field;
  double to_internal;  // multiply file value by this
  bool required;
};

// File keys and their SI destinations. pressure_bar and raman_shift_hz are the
// two unit conversions; everything else is stored as written.
const std::array<KeySpec, 20> kKeys{{
    {"pressure_bar", &ExperimentConfig::pressure, constants::kPascalPerBar, true},
    {"temperature_K", &ExperimentConfig::temperature, 1.0, true},
    {"pulse_energy_J", &ExperimentConfig::pulse_energy, 1.0, true},
    {"pulse_width_s", &ExperimentConfig::pulse_width, 1.0, true},
    {"fiber_length_m", &ExperimentConfig::fiber_length, 1.0, true},
    {"fiber_diameter_m", &ExperimentConfig::fiber_diameter, 1.0, true},
    {"fiber_area_total_m2", &ExperimentConfig::fiber_area_total, 1.0, true},
    {"fiber_volume_m3", &ExperimentConfig::fiber_volume, 1.0, true},
    {"mode_area_lp01_m2", &ExperimentConfig::mode_area_lp01, 1.0, true},
    {"raman_shift_hz", &ExperimentConfig::raman_shift, kTwoPi, true},
    {"t2_s", &ExperimentConfig::t2, 1.0, true},
    {"gamma_hz", &ExperimentConfig::damping_gamma, 1.0, true},
    {"nu_pump_hz", &ExperimentConfig::freq_pump, 1.0, true},
    {"nu_stokes_hz", &ExperimentConfig::freq_stokes, 1.0, true},
    {"nu_mixing_hz", &ExperimentConfig::freq_mixing, 1.0, true},
    {"nu_up_hz", &ExperimentConfig::freq_up, 1.0, true},
    {"gain_pump_stokes_m_per_w", &ExperimentConfig::gain_pump_stokes, 1.0, true},
    {"gain_mixing_up_m_per_w", &ExperimentConfig::gain_mixing_up, 1.0, true},
    {"delta_beta_per_m", &ExperimentConfig::delta_beta, 1.0, false},
    {"stokes_seed", &ExperimentConfig::stokes_seed, 1.0, false},
}};

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

void require_positive(double v, const char* key) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw ConfigError(key, std::string(key) + " must be strictly positive and finite");
  }
}

void require_positive_arg(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be strictly positive and finite");
  }
}

bool within_relative(double value, double reference, double rel) {
  return std::abs(value - reference) <= rel * std::abs(reference);
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  for (const auto& k : kKeys) {
    const double v = cfg.*k.field;
    if (k.field == &ExperimentConfig::delta_beta) {
      if (!std::isfinite(v)) throw ConfigError(k.name, "delta_beta_per_m must be finite");
      continue;
    }
    if (k.field == &ExperimentConfig::stokes_seed || k.field == &ExperimentConfig::gain_pump_stokes ||
        k.field == &ExperimentConfig::gain_mixing_up) {
      if (!(v >= 0) || !std::isfinite(v)) {
        throw ConfigError(k.name, std::string(k.name) + " must be non-negative and finite");
      }
      continue;
    }
    require_positive(v, k.name);
  }

  const double shift_hz = cfg.raman_shift / kTwoPi;
  if (!within_relative(cfg.freq_pump - cfg.freq_stokes, shift_hz, 0.005)) {
    throw ConfigError("nu_stokes_hz",
                      "pump-Stokes detuning differs from the Raman shift by more than 0.5%");
  }
  if (!within_relative(cfg.freq_up - cfg.freq_mixing, shift_hz, 0.005)) {
    throw ConfigError("nu_up_hz",
                      "up-converted minus mixing frequency differs from the Raman shift by "
                      "more than 0.5%");
  }
  if (!within_relative(cfg.damping_gamma * cfg.t2, 1.0, 0.005)) {
    throw ConfigError("gamma_hz", "gamma_hz * t2_s must equal 1 within 0.5%");
  }
}

ExperimentConfig parse_config(std::string_view text, std::string_view source) {
  ExperimentConfig cfg;
  std::map<std::string, int, std::less<>> seen;
  const std::string src(source);

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", src + ":" + std::to_string(line_no) + ": expected `key = value`");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    const KeySpec* spec = nullptr;
    for (const auto& k : kKeys) {
      if (key == k.name) spec = &k;
    }
    if (spec == nullptr) {
      throw ConfigError(key, src + ":" + std::to_string(line_no) + ": unknown key `" + key + "`");
    }
    if (seen.count(key) != 0) {
      throw ConfigError(key, src + ":" + std::to_string(line_no) + ": duplicate key `" + key +
                                 "` (first set on line " + std::to_string(seen[key]) + ")");
    }
    seen[key] = static_cast<int>(line_no);

    double parsed = 0;
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, parsed);
    if (value.empty() || ec != std::errc() || ptr != last) {
      throw ConfigError(key, src + ":" + std::to_string(line_no) + ": value of `" + key +
                                 "` is not a number: `" + std::string(value) + "`");
    }
    cfg.*spec->field = parsed * spec->to_internal;
  }

  for (const auto& k : kKeys) {
    if (k.required && seen.count(k.name) == 0) {
      throw ConfigError(k.name, src + ": missing required key `" + std::string(k.name) + "`");
    }
  }

  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("", "cannot open config file `" + path.string() + "`");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

std::string to_config_text(const ExperimentConfig& cfg) {
  std::string out;
  char line[128];
  for (const auto& k : kKeys) {
    std::snprintf(line, sizeof line, "%s = %.17g\n", k.name, cfg.*k.field / k.to_internal);
    out += line;
  }
  return out;
}

double molecule_count(double pressure, double volume, double temperature) {
  require_positive_arg(pressure, "pressure");
  require_positive_arg(volume, "volume");
  require_positive_arg(temperature, "temperature");
  return pressure * volume / (constants::kBoltzmann * temperature);
}

double quantization_volume(double pulse_width, double fiber_area_total) {
  require_positive_arg(pulse_width, "pulse_width");
  require_positive_arg(fiber_area_total, "fiber_area_total");
  return constants::kSpeedOfLight * pulse_width * fiber_area_total;
}

double coupling_from_gain(double gain, double damping_gamma, double number_density,
                          double omega_lower) {
  if (!(gain >= 0) || !std::isfinite(gain)) throw DomainError("gain must be non-negative and finite");
  require_positive_arg(damping_gamma, "damping_gamma");
  require_positive_arg(number_density, "number_density");
  require_positive_arg(omega_lower, "omega_lower");
  using namespace constants;
  const double c2 = kSpeedOfLight * kSpeedOfLight;
  const double e2 = kVacuumPermittivity * kVacuumPermittivity;
  return -std::sqrt(2.0 * gain * c2 * damping_gamma * e2 / (number_density * kHbar * omega_lower));
}

double interaction_strength(double kappa1, double nu_a, double nu_b, double quant_volume) {
  if (!(kappa1 <= 0) || !std::isfinite(kappa1)) {
    throw DomainError("kappa1 must be non-positive and finite");
  }
  require_positive_arg(nu_a, "nu_a");
  require_positive_arg(nu_b, "nu_b");
  require_positive_arg(quant_volume, "quant_volume");
  using namespace constants;
  return -kappa1 * kPlanck * std::sqrt(nu_a * nu_b) / (2.0 * kVacuumPermittivity * quant_volume);
}

DerivedParams derive_params(const ExperimentConfig& cfg) {
  validate(cfg);
  DerivedParams d;
  d.n_molecules = molecule_count(cfg.pressure, cfg.fiber_volume, cfg.temperature);
  d.number_density = d.n_molecules / cfg.fiber_volume;
  d.quant_volume = quantization_volume(cfg.pulse_width, cfg.fiber_area_total);

  // omega_P - Omega and omega_U - Omega, i.e. the Stokes and mixing partners.
  const double omega_ps_lower = kTwoPi * cfg.freq_pump - cfg.raman_shift;
  const double omega_mu_lower = kTwoPi * cfg.freq_up - cfg.raman_shift;
  d.kappa1_p = coupling_from_gain(cfg.gain_pump_stokes, cfg.damping_gamma, d.number_density,
                                  omega_ps_lower);
  d.kappa1_u = coupling_from_gain(cfg.gain_mixing_up, cfg.damping_gamma, d.number_density,
                                  omega_mu_lower);
  d.g_s = interaction_strength(d.kappa1_p, cfg.freq_pump, cfg.freq_stokes, d.quant_volume);
  d.g_u = interaction_strength(d.kappa1_u, cfg.freq_up, cfg.freq_mixing, d.quant_volume);

  d.n_photons = cfg.pulse_energy / (constants::kPlanck * cfg.freq_pump);
  d.alpha_p0 = std::sqrt(d.n_photons);
  return d;
}

double wavelength(double nu) {
  require_positive_arg(nu, "frequency");
  return constants::kSpeedOfLight / nu;
}

}  // namespace qfc::params
