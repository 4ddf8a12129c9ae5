#include "qfc/params.hpp"

#include <random>

#include "gtest/gtest.h"
#include "qfc/constants.hpp"
#include "qfc/error.hpp"
#include "test_util.hpp"

using namespace qfc;
using qfc::testing::config_with;
using qfc::testing::default_config;
using qfc::testing::rel_err;

TEST(params, default_config_units) {
  const auto cfg = default_config();
  EXPECT_DOUBLE_EQ(cfg.pressure, 70e5);
  EXPECT_DOUBLE_EQ(cfg.raman_shift, 1.2457e14 * constants::kTwoPi);
  EXPECT_DOUBLE_EQ(cfg.freq_pump, 2.8176e14);
  EXPECT_DOUBLE_EQ(cfg.delta_beta, 0.0);
  EXPECT_DOUBLE_EQ(cfg.stokes_seed, 1.0);
}

TEST(params, table_values) {
  const auto d = params::derive_params(default_config());
  EXPECT_LT(rel_err(d.n_molecules, 1.4925e18), 1e-3);
  EXPECT_LT(rel_err(d.quant_volume, 2.434e-8), 2e-3);
  EXPECT_LT(rel_err(d.kappa1_p, -8.9518e-8), 2e-3);
  EXPECT_LT(rel_err(d.kappa1_u, -9.0080e-8), 2e-3);
  EXPECT_LT(rel_err(d.g_s, 2.8962e-8), 3e-3);
  EXPECT_LT(rel_err(d.g_u, 3.6760e-8), 3e-3);
  EXPECT_LT(rel_err(d.alpha_p0, 2.48e7), 5e-3);
  EXPECT_LT(d.kappa1_p, 0.0);
  EXPECT_LT(d.kappa1_u, 0.0);
}

TEST(params, gamma_t2_consistency) {
  const auto cfg = default_config();
  EXPECT_GE(cfg.damping_gamma * cfg.t2, 0.995);
  EXPECT_LE(cfg.damping_gamma * cfg.t2, 1.005);
}

TEST(params, molecule_count_scaling) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int k = 0; k < 50; ++k) {
    const double p = 1e6 * u(rng), v = 1e-9 * u(rng), t = 300 * u(rng), f = u(rng);
    const double n = params::molecule_count(p, v, t);
    EXPECT_NEAR(params::molecule_count(f * p, v, t) / n, f, 1e-12);
    EXPECT_NEAR(params::molecule_count(p, f * v, t) / n, f, 1e-12);
    EXPECT_NEAR(params::molecule_count(p, v, f * t) / n, 1.0 / f, 1e-12);
  }
}

TEST(params, helpers_reject_bad_domain) {
  EXPECT_THROW(params::molecule_count(-1, 1, 1), DomainError);
  EXPECT_THROW(params::quantization_volume(0, 1), DomainError);
  EXPECT_THROW(params::interaction_strength(1e-8, 1, 1, 1), DomainError);
  EXPECT_THROW(params::coupling_from_gain(-1, 1, 1, 1), DomainError);
}

TEST(params, deterministic) {
  const auto cfg = default_config();
  EXPECT_EQ(params::derive_params(cfg), params::derive_params(cfg));
}

TEST(params, round_trip) {
  const auto cfg = default_config();
  const auto again = params::parse_config(params::to_config_text(cfg));
  EXPECT_LT(rel_err(again.pressure, cfg.pressure), 1e-12);
  EXPECT_LT(rel_err(again.raman_shift, cfg.raman_shift), 1e-12);
  EXPECT_LT(rel_err(again.gain_mixing_up, cfg.gain_mixing_up), 1e-12);
  EXPECT_EQ(again.delta_beta, cfg.delta_beta);
}

TEST(params, errors_name_the_key) {
  const auto key_of = [](const std::string& text) -> std::string {
    try {
      params::parse_config(text);
    } catch (const ConfigError& e) {
      return e.key();
    }
    return "<none>";
  };
  EXPECT_EQ(key_of(config_with("pressure_bar", "seventy")), "pressure_bar");
  EXPECT_EQ(key_of(config_with("temperature_K", "-3")), "temperature_K");
  EXPECT_EQ(key_of(config_with("nu_stokes_hz", "1.6e14")), "nu_stokes_hz");
  EXPECT_EQ(key_of(config_with("gamma_hz", "2e10")), "gamma_hz");
  EXPECT_EQ(key_of(config_with("pulse_width_s", "") + "bogus_key = 1\n"), "pulse_width_s");
  EXPECT_EQ(key_of(config_with("fiber_length_m", "0.6") + "bogus_key = 1\n"), "bogus_key");
  EXPECT_EQ(key_of(config_with("fiber_length_m", "0.6") + "fiber_length_m = 1\n"), "fiber_length_m");
  EXPECT_EQ(key_of("pressure_bar = 70\n"), "temperature_K");
}

TEST(params, zero_gain_is_loadable) {
  const auto cfg = params::parse_config(config_with("gain_pump_stokes_m_per_w", "0"));
  const auto d = params::derive_params(cfg);
  EXPECT_EQ(d.g_s, 0.0);
  EXPECT_GT(d.g_u, 0.0);
}

TEST(params, wavelength_display) {
  EXPECT_NEAR(params::wavelength(2.8176e14), 1.064e-6, 1e-9);
}
