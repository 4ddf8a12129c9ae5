#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qfc/conversion.hpp"
#include "qfc/csv.hpp"
#include "qfc/params.hpp"
#include "qfc/srs.hpp"

namespace qfc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

// ---- derive ---------------------------------------------------------------

struct DeriveRow {
  std::string name;
  std::string unit;
  double value = 0;
  std::optional<double> reference;  // published value, when one exists

  std::optional<double> deviation_pct() const;
};

std::vector<DeriveRow> derive_rows(const params::ExperimentConfig& cfg);
std::string derive_report(const params::ExperimentConfig& cfg);

// ---- propagate / convert --------------------------------------------------

/// z_m, alpha_p_norm, alpha_s_norm, phi_rad, xi_abs_over_Nhalf, w
csv::Table profile_table(const srs::FieldProfile& p, srs::XiMode mode = srs::XiMode::Eom);

/// z_m, theta_rad, n_i, n_m, n_u, c_im, c_iu, eof_im, eof_iu
csv::Table trace_table(const conversion::ConversionTrace& tr);

struct ConvertResult {
  srs::FieldProfile profile;
  conversion::ConversionTrace trace;
  std::size_t crossing = 0;  // photon-number argmin
};

ConvertResult run_convert(const params::ExperimentConfig& cfg, std::size_t n_steps,
                          srs::XiMode mode);

// ---- scan -----------------------------------------------------------------

enum class Spacing { Linear, Log };

struct ScanOptions {
  double e_min = 40e-6;
  double e_max = 200e-6;
  std::size_t energies = 16;
  Spacing spacing = Spacing::Linear;
  std::size_t jobs = 1;
  std::size_t n_steps = srs::kDefaultSteps;
  srs::XiMode mode = srs::XiMode::Eom;
};

/// Per-energy traces on a shared z grid. Rows of `c_iu` follow `energies`.
struct ScanResult {
  std::vector<double> energies;    // J
  std::vector<double> crossing_z;  // m, argmin |c_im - c_iu| per energy
  std::vector<double> z;           // m
  std::vector<std::vector<double>> c_im;
  std::vector<std::vector<double>> c_iu;
};

std::vector<double> scan_energies(const ScanOptions& opts);

/// Throws DomainError on an empty or inverted range or fewer than 2 energies.
ScanResult run_scan(const params::ExperimentConfig& cfg, const ScanOptions& opts);

/// Long format: energy_J, z_m, c_im, c_iu, crossing_z_m
csv::Table scan_table(const ScanResult& r);

// ---- validate -------------------------------------------------------------

struct ValidateOptions {
  int n_max = 1024;
  double g_u_perturbation = 0.0;  // relative, brute-force route only
};

struct ValidateCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GapRow {
  long n_spins = 0;
  double theta_sc = 0;
  double w_exact = 0;
  double w_sc = 0;
  double gap = 0;
  double predicted = 0;
};

struct ValidateReport {
  std::vector<ValidateCheck> checks;
  std::vector<GapRow> gaps;
  std::vector<double> gap_ratios;

  bool all_pass() const;
  std::size_t failures() const;
  std::string text() const;
};

/// Reference ensemble parameter and angle of the convergence study.
inline constexpr double kGapStudyS = 0.3;
inline constexpr double kGapStudyTheta = 1.0;

/// Throws DomainError unless 1 <= n_max <= 4096.
ValidateReport run_validate(const ValidateOptions& opts);

}  // namespace qfc::cli
