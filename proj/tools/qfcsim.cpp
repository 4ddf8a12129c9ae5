// qfcsim: command-line front end. Exit codes: 0 ok, 1 validation or
// numerical failure, 2 usage or configuration error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfc/commands.hpp"
#include "qfc/error.hpp"

namespace {

using namespace qfc;

std::filesystem::path resolve_config(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("QFCSIM_CONFIG"); env && *env) return env;
  return QFC_DEFAULT_CONFIG;
}

void emit(const csv::Table& t, const std::string& out) {
  if (out.empty() || out == "-") {
    csv::write(std::cout, t);
  } else {
    csv::write_file(out, t);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Raman-driven quantum frequency conversion simulator"};
  app.require_subcommand(1);

  std::string config_flag;
  std::string out;
  std::size_t steps = srs::kDefaultSteps;
  std::string xi_mode = "eom";
  cli::ScanOptions scan;
  std::string spacing = "linear";
  cli::ValidateOptions val;
  bool perturb = false;

  const auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_flag, "Config file (falls back to $QFCSIM_CONFIG)");
  };
  const auto add_steps = [&](CLI::App* sub) {
    sub->add_option("--steps", steps, "RK4 steps over the fiber")->capture_default_str();
  };
  const auto add_xi = [&](CLI::App* sub) {
    sub->add_option("--xi-mode", xi_mode, "Coherence driving conversion")
        ->check(CLI::IsMember({"eom", "analytic"}))
        ->capture_default_str();
  };

  auto* derive = app.add_subcommand("derive", "Derived constants against the reference table");
  add_config(derive);

  auto* propagate = app.add_subcommand("propagate", "Pump/Stokes/coherence profile CSV");
  add_config(propagate);
  propagate->add_option("--out", out, "Output CSV (stdout if omitted)");
  add_steps(propagate);
  add_xi(propagate);

  auto* convert = app.add_subcommand("convert", "Photon numbers and concurrences CSV");
  add_config(convert);
  convert->add_option("--out", out, "Output CSV (stdout if omitted)");
  add_steps(convert);
  add_xi(convert);

  auto* scan_cmd = app.add_subcommand("scan", "Concurrence traces over pump energy");
  add_config(scan_cmd);
  scan_cmd->add_option("--out", out, "Output CSV (stdout if omitted)");
  add_steps(scan_cmd);
  add_xi(scan_cmd);
  scan_cmd->add_option("--e-min", scan.e_min, "Lowest pulse energy (J)")->capture_default_str();
  scan_cmd->add_option("--e-max", scan.e_max, "Highest pulse energy (J)")->capture_default_str();
  scan_cmd->add_option("--scan-steps", scan.energies, "Number of energies")->capture_default_str();
  scan_cmd->add_option("--spacing", spacing, "Energy spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  scan_cmd->add_option("--jobs", scan.jobs, "Worker threads")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Oracle cross-checks and invariants");
  validate->add_option("--n-max", val.n_max, "Largest dense ensemble")->capture_default_str();
  validate->add_flag("--perturb-gu", perturb, "Perturb G_U by 1% on one oracle route")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  const srs::XiMode mode = xi_mode == "analytic" ? srs::XiMode::Analytic : srs::XiMode::Eom;
  try {
    if (*validate) {
      val.g_u_perturbation = perturb ? 0.01 : 0.0;
      const cli::ValidateReport rep = cli::run_validate(val);
      std::cout << rep.text();
      return rep.all_pass() ? cli::kExitOk : cli::kExitValidation;
    }

    const params::ExperimentConfig cfg = params::load_config(resolve_config(config_flag));
    if (*derive) {
      std::cout << cli::derive_report(cfg);
    } else if (*propagate) {
      const params::DerivedParams d = params::derive_params(cfg);
      emit(cli::profile_table(srs::propagate_fields(d, cfg, steps), mode), out);
    } else if (*convert) {
      const cli::ConvertResult r = cli::run_convert(cfg, steps, mode);
      emit(cli::trace_table(r.trace), out);
      std::fprintf(stderr, "crossing: z = %.6g m (index %zu), theta = %.6g rad\n",
                   r.trace.z[r.crossing], r.crossing, r.trace.theta[r.crossing]);
    } else if (*scan_cmd) {
      scan.spacing = spacing == "log" ? cli::Spacing::Log : cli::Spacing::Linear;
      scan.n_steps = steps;
      scan.mode = mode;
      emit(cli::scan_table(cli::run_scan(cfg, scan)), out);
    }
    return cli::kExitOk;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error%s%s: %s\n", e.key().empty() ? "" : " in ",
                 e.key().c_str(), e.what());
    return cli::kExitUsage;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitUsage;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return cli::kExitValidation;
  }
}
