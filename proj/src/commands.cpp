#include "qfc/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <unsupported/Eigen/MatrixFunctions>

#include "qfc/bloch.hpp"
#include "qfc/error.hpp"
#include "qfc/oracle.hpp"
#include "qfc/simd/kernels.hpp"

namespace qfc::cli {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string sci(double v) { return fmt("%.6g", v); }

}  // namespace

// ---- derive ---------------------------------------------------------------

std::optional<double> DeriveRow::deviation_pct() const {
  if (!reference || *reference == 0.0) return std::nullopt;
  return 100.0 * (value - *reference) / std::abs(*reference);
}

std::vector<DeriveRow> derive_rows(const params::ExperimentConfig& cfg) {
  const params::DerivedParams d = params::derive_params(cfg);
  const double g = srs::collective_coupling(d, cfg);
  return {
      {"N (molecules)", "", d.n_molecules, 1.4925e18},
      {"number density", "m^-3", d.number_density, std::nullopt},
      {"quantization volume", "m^3", d.quant_volume, 2.434e-8},
      {"kappa1_p", "m^2 C^2 J^-2 s^-1", d.kappa1_p, -8.9518e-8},
      {"kappa1_u", "m^2 C^2 J^-2 s^-1", d.kappa1_u, -9.0080e-8},
      {"G_S", "Hz", d.g_s, 2.8962e-8},
      {"G_U", "Hz", d.g_u, 3.6760e-8},
      {"alpha_P(0)", "", d.alpha_p0, 2.48e7},
      {"pump photons", "", d.n_photons, std::nullopt},
      {"collective coupling g", "Hz", g, std::nullopt},
      {"g / (G_S N)", "", d.g_s > 0 ? g / (d.g_s * d.n_molecules) : 0.0, std::nullopt},
      {"lambda_pump", "m", params::wavelength(cfg.freq_pump), std::nullopt},
      {"lambda_stokes", "m", params::wavelength(cfg.freq_stokes), std::nullopt},
      {"lambda_mixing", "m", params::wavelength(cfg.freq_mixing), std::nullopt},
      {"lambda_up", "m", params::wavelength(cfg.freq_up), std::nullopt},
  };
}

std::string derive_report(const params::ExperimentConfig& cfg) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-22s %15s %-18s %15s %10s\n", "quantity", "value", "unit",
                "reference", "dev %");
  out << line;
  for (const auto& r : derive_rows(cfg)) {
    const auto dev = r.deviation_pct();
    std::snprintf(line, sizeof line, "%-22s %15.6g %-18s %15s %10s\n", r.name.c_str(), r.value,
                  r.unit.c_str(), r.reference ? sci(*r.reference).c_str() : "-",
                  dev ? fmt("%+.4f", *dev).c_str() : "-");
    out << line;
  }
  return out.str();
}

// ---- propagate / convert --------------------------------------------------

csv::Table profile_table(const srs::FieldProfile& p, srs::XiMode mode) {
  const std::size_t n = p.size();
  std::vector<double> ap(n), as(n), xi(n);
  const auto& xi_abs = p.xi_abs(mode);
  for (std::size_t k = 0; k < n; ++k) {
    ap[k] = p.alpha_p[k] / p.alpha_p0;
    as[k] = p.alpha_s[k] / p.alpha_p0;
    xi[k] = p.n_molecules > 0 ? xi_abs[k] / (0.5 * p.n_molecules) : 0.0;
  }
  csv::Table t;
  t.add("z_m", p.z);
  t.add("alpha_p_norm", std::move(ap));
  t.add("alpha_s_norm", std::move(as));
  t.add("phi_rad", p.phi);
  t.add("xi_abs_over_Nhalf", std::move(xi));
  t.add("w", p.inversion);
  return t;
}

csv::Table trace_table(const conversion::ConversionTrace& tr) {
  csv::Table t;
  t.add("z_m", tr.z);
  t.add("theta_rad", tr.theta);
  t.add("n_i", tr.n_i);
  t.add("n_m", tr.n_m);
  t.add("n_u", tr.n_u);
  t.add("c_im", tr.c_im);
  t.add("c_iu", tr.c_iu);
  t.add("eof_im", tr.eof_im);
  t.add("eof_iu", tr.eof_iu);
  return t;
}

ConvertResult run_convert(const params::ExperimentConfig& cfg, std::size_t n_steps,
                          srs::XiMode mode) {
  const params::DerivedParams d = params::derive_params(cfg);
  ConvertResult r;
  r.profile = srs::propagate_fields(d, cfg, n_steps);
  r.trace = conversion::conversion_trace(r.profile, d, mode);
  r.crossing = conversion::crossing_index(r.trace);
  return r;
}

// ---- scan -----------------------------------------------------------------

std::vector<double> scan_energies(const ScanOptions& o) {
  if (!(o.e_min > 0) || !(o.e_max > o.e_min) || !std::isfinite(o.e_max)) {
    throw DomainError("scan: need 0 < e_min < e_max");
  }
  if (o.energies < 2) throw DomainError("scan: need at least 2 energies");
  std::vector<double> e(o.energies);
  const double last = static_cast<double>(o.energies - 1);
  for (std::size_t k = 0; k < o.energies; ++k) {
    const double f = static_cast<double>(k) / last;
    e[k] = o.spacing == Spacing::Linear
               ? o.e_min + f * (o.e_max - o.e_min)
               : std::exp(std::log(o.e_min) + f * (std::log(o.e_max) - std::log(o.e_min)));
  }
  e.front() = o.e_min;
  e.back() = o.e_max;
  return e;
}

ScanResult run_scan(const params::ExperimentConfig& cfg, const ScanOptions& opts) {
  ScanResult r;
  r.energies = scan_energies(opts);
  const std::size_t n = r.energies.size();
  r.crossing_z.resize(n);
  r.c_im.resize(n);
  r.c_iu.resize(n);
  std::vector<std::vector<double>> grids(n);
  std::vector<std::exception_ptr> errors(n);

  // Results land in per-energy slots, so output order never depends on
  // which worker finishes first.
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        params::ExperimentConfig c = cfg;
        c.pulse_energy = r.energies[k];
        ConvertResult cr = run_convert(c, opts.n_steps, opts.mode);
        r.crossing_z[k] = cr.trace.z[conversion::concurrence_crossing_index(cr.trace)];
        r.c_im[k] = std::move(cr.trace.c_im);
        r.c_iu[k] = std::move(cr.trace.c_iu);
        grids[k] = std::move(cr.trace.z);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, n);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  r.z = std::move(grids.front());
  return r;
}

csv::Table scan_table(const ScanResult& r) {
  std::vector<double> e, z, cim, ciu, cz;
  for (std::size_t k = 0; k < r.energies.size(); ++k) {
    for (std::size_t i = 0; i < r.z.size(); ++i) {
      e.push_back(r.energies[k]);
      z.push_back(r.z[i]);
      cim.push_back(r.c_im[k][i]);
      ciu.push_back(r.c_iu[k][i]);
      cz.push_back(r.crossing_z[k]);
    }
  }
  csv::Table t;
  t.add("energy_J", std::move(e));
  t.add("z_m", std::move(z));
  t.add("c_im", std::move(cim));
  t.add("c_iu", std::move(ciu));
  t.add("crossing_z_m", std::move(cz));
  return t;
}

// ---- validate -------------------------------------------------------------

bool ValidateReport::all_pass() const { return failures() == 0; }

std::size_t ValidateReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::string ValidateReport::text() const {
  std::ostringstream out;
  char line[200];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-4s %-52s %s\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                  c.detail.c_str());
    out << line;
  }
  out << "\nsemiclassical convergence (s = " << kGapStudyS << ", theta_sc = " << kGapStudyTheta
      << ")\n";
  std::snprintf(line, sizeof line, "%8s %10s %16s %16s %14s %14s\n", "N", "theta_sc", "w_exact",
                "w_sc", "gap", "predicted");
  out << line;
  for (const auto& g : gaps) {
    std::snprintf(line, sizeof line, "%8ld %10.6f %16.12f %16.12f %14.6e %14.6e\n", g.n_spins,
                  g.theta_sc, g.w_exact, g.w_sc, g.gap, g.predicted);
    out << line;
  }
  out << "gap(N)/gap(2N):";
  for (double r : gap_ratios) out << ' ' << fmt("%.4f", r);
  out << "\n\n" << checks.size() - failures() << '/' << checks.size() << " checks passed\n";
  return out.str();
}

namespace {

class Checker {
 public:
  explicit Checker(ValidateReport& r) : r_(r) {}

  void expect(std::string name, bool pass, std::string detail) {
    r_.checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void below(std::string name, double value, double limit) {
    expect(std::move(name), value < limit, "|err| = " + sci(value) + " < " + sci(limit));
  }
  void within(std::string name, double value, double lo, double hi) {
    expect(std::move(name), value >= lo && value <= hi,
           sci(value) + " in [" + sci(lo) + ", " + sci(hi) + "]");
  }

 private:
  ValidateReport& r_;
};

double coeff_distance(const oracle::ReducedCoefficients& a, const oracle::ReducedCoefficients& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.w - b.w), std::abs(a.y - b.y)});
}

void check_oracle_routes(Checker& ck, const ValidateOptions& o, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.1, 2.0), ph(0.0, 2.0 * std::numbers::pi),
      ang(0.05, 3.0);
  const double scale = 1.0 + o.g_u_perturbation;
  for (int n : {1, 2, 4, 8, 16, 64, 256, 1024, 4096}) {
    if (n > o.n_max) break;
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      const std::complex<double> s = std::polar(mag(rng), ph(rng));
      const double t = oracle::time_for_angle(n, s, 1.0, ang(rng));
      worst = std::max(worst, coeff_distance(oracle::exact_coefficients(n, s, 1.0, t),
                                             oracle::brute_force_coefficients(n, s, 1.0, t, scale)));
    }
    ck.below("exact sums == doublet evolution, N = " + std::to_string(n), worst, 1e-10);
  }
  for (int n : {1, 7, 300}) {
    const auto c = oracle::exact_coefficients(n, {0.4, 0.2}, 1.0, 0.0);
    ck.below("t = 0 leaves (1/2, 1/2, 0), N = " + std::to_string(n),
             coeff_distance(c, oracle::ReducedCoefficients{}), 1e-15);
  }
  for (double r : {0.3, 1.0, 1.7}) {
    const double a = 0.9;
    const auto c = oracle::exact_coefficients(1, r, 1.0, a);
    const double r2 = r * r;
    const double x = (1.0 + r2 * std::cos(a) * std::cos(a)) / (2.0 * (1.0 + r2));
    const double w = (1.0 + r2 * std::cos(a)) / (2.0 * (1.0 + r2));
    ck.below("N = 1 two-term reduction, |s| = " + fmt("%.1f", r),
             std::max(std::abs(c.x - x), std::abs(c.w - w)), 1e-14);
  }
  for (long n : {64L, 512L, 2048L}) {
    const std::complex<double> s{0.8, 0.5};
    const double t = oracle::time_for_angle(n, s, 1.0, 1.3);
    const auto a = oracle::exact_coefficients(n, s, 1.0, t, {.truncate = true});
    const auto b = oracle::exact_coefficients(n, s, 1.0, t, {.truncate = false});
    ck.below("truncated sum vs full sum, N = " + std::to_string(n),
             coeff_distance(a, b) / std::max(std::abs(b.w), 1e-300), 1e-14);
  }
  for (int n : {4, 64, 1000}) {
    const std::complex<double> s = std::polar(mag(rng), ph(rng));
    const auto c = oracle::exact_coefficients(n, s, 1.0, oracle::time_for_angle(n, s, 1.0, 2.0));
    ck.expect("oracle coefficient bounds, N = " + std::to_string(n),
              c.x >= 0.0 && c.x <= 0.5 && std::abs(c.w) <= 0.5 && std::abs(c.y) <= 0.5,
              "x = " + sci(c.x) + ", |w| = " + sci(std::abs(c.w)) + ", |y| = " + sci(std::abs(c.y)));
    const auto check_psd = [](const conversion::TwoQubitDensity& m) {
      Eigen::SelfAdjointEigenSolver<conversion::TwoQubitDensity> es(m, Eigen::EigenvaluesOnly);
      return std::max(0.0, -es.eigenvalues().minCoeff()) + std::abs(m.trace().real() - 1.0);
    };
    ck.below("oracle reduced matrices PSD, unit trace, N = " + std::to_string(n),
             std::max(check_psd(oracle::rho_idler_mixing(c)), check_psd(oracle::rho_idler_up(c))),
             1e-12);
  }
}

void check_convergence(Checker& ck, ValidateReport& rep) {
  const std::complex<double> s = kGapStudyS;
  std::vector<double> signed_gap;
  std::vector<double> predicted;
  for (long n : {64L, 128L, 256L, 512L, 1024L, 2048L, 4096L, 10000L}) {
    const double t = oracle::time_for_angle(n, s, 1.0, kGapStudyTheta);
    GapRow g;
    g.n_spins = n;
    g.theta_sc = oracle::semiclassical_angle(n, s, 1.0, t);
    g.w_exact = oracle::exact_coefficients(n, s, 1.0, t).w.real();
    g.w_sc = oracle::semiclassical_w(n, s, 1.0, t);
    g.gap = std::abs(g.w_exact - g.w_sc);
    g.predicted = oracle::first_order_correction(n, s, 1.0, t);
    signed_gap.push_back(g.w_exact - g.w_sc);
    predicted.push_back(g.predicted);
    rep.gaps.push_back(g);
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const double ratio = rep.gaps[k].gap / rep.gaps[k + 1].gap;
    rep.gap_ratios.push_back(ratio);
    ck.within("gap(N)/gap(2N), N = " + std::to_string(rep.gaps[k].n_spins), ratio, 1.5, 2.5);
    ck.within("correction(N)/correction(2N), N = " + std::to_string(rep.gaps[k].n_spins),
              predicted[k] / predicted[k + 1], 1.7, 2.3);
  }
  ck.below("gap at N = 10^4", rep.gaps.back().gap, 1e-3);
  ck.below("predicted correction vs gap at N = 512 (relative)",
           std::abs(predicted[3] - signed_gap[3]) / std::abs(signed_gap[3]), 0.2);

  double prev = INFINITY;
  bool monotone = true;
  std::string trail;
  for (long n : {16L, 64L, 256L, 1024L}) {
    const double t = oracle::time_for_angle(n, s, 1.0, kGapStudyTheta);
    const auto c = oracle::exact_coefficients(n, s, 1.0, t);
    const double err = std::abs(conversion::wootters_concurrence(oracle::rho_idler_mixing(c)) -
                                std::abs(std::cos(kGapStudyTheta)));
    monotone = monotone && err < prev;
    prev = err;
    trail += sci(err) + " ";
  }
  ck.expect("oracle concurrence -> |cos theta_sc| monotonically", monotone, trail);
}

void check_bloch(Checker& ck, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), ut(0.0, 1.0);
  for (int n = 1; n <= 6; ++n) {
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const std::complex<double> eta{u(rng), u(rng)};
      const double t = 1.4 * ut(rng) / std::abs(eta);
      const Eigen::MatrixXcd h = eta * bloch::jplus_matrix(n) + std::conj(eta) * bloch::jminus_matrix(n);
      const Eigen::MatrixXcd evo = (std::complex<double>(0.0, -t) * h).exp();
      const auto v = bloch::apply_disentangled(bloch::disentangle(eta, t), bloch::ground_state(n));
      for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(evo(i, 0) - v.amps[i]));
    }
    ck.below("disentangled product == dense exponential, N = " + std::to_string(n), worst, 1e-9);
  }
  for (int n : {8, 32, 64}) {
    const std::complex<double> s{u(rng), u(rng)};
    const auto v = bloch::spin_coherent(n, s);
    const std::complex<double> want = static_cast<double>(n) * s / (1.0 + std::norm(s));
    ck.below("<J-> of spin coherent state, N = " + std::to_string(n),
             std::abs(bloch::expect_jminus(v) - want) + std::abs(v.norm_squared() - 1.0), 1e-10);
  }
  for (int k = 0; k < 4; ++k) {
    const std::complex<double> eta{u(rng), u(rng)};
    const auto c = bloch::disentangle(eta, 1.5 * ut(rng) / std::abs(eta));
    ck.below("disentangling invariants, sample " + std::to_string(k),
             std::abs(std::exp(-c.s0) * (1.0 + std::norm(c.s)) - 1.0) +
                 std::abs(std::abs(c.s1) - std::abs(c.s)),
             1e-12);
  }
  {
    const auto v = bloch::apply_jplus_n(bloch::ground_state(3), 3);
    ck.below("(J+)^3 on N = 3 ground state", std::abs(v.amps[3] - 6.0), 1e-12);
  }
  for (int n : {3, 10}) {
    const Eigen::MatrixXcd jp = bloch::jplus_matrix(n), jm = bloch::jminus_matrix(n),
                           jz = bloch::jz_matrix(n);
    const double e1 = (jz * jp - jp * jz - jp).cwiseAbs().maxCoeff();
    const double e2 = (jp * jm - jm * jp - 2.0 * jz).cwiseAbs().maxCoeff();
    ck.below("ladder commutators, N = " + std::to_string(n), std::max(e1, e2), 1e-12);
  }
}

void check_conversion(Checker& ck, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0, worst_id = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double theta = th(rng);
    const auto st = conversion::evolve_bell(theta, th(rng));
    const auto cc = conversion::concurrence_closed_form(theta);
    worst = std::max({worst,
                      std::abs(conversion::wootters_concurrence(conversion::reduce_idler_mixing(st)) - cc.c_im),
                      std::abs(conversion::wootters_concurrence(conversion::reduce_idler_up(st)) - cc.c_iu)});
    const auto pn = conversion::photon_numbers(st);
    worst_id = std::max({worst_id, std::abs(pn.n_m + pn.n_u - 0.5), std::abs(pn.n_i - 0.5),
                         std::abs(cc.c_im * cc.c_im + cc.c_iu * cc.c_iu - 1.0)});
  }
  ck.below("Wootters concurrence == closed form (200 angles)", worst, 1e-10);
  ck.below("photon-number and concurrence identities (200 angles)", worst_id, 1e-12);

  bool monotone = true;
  double prev = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double e = conversion::entanglement_of_formation(k / 1000.0);
    monotone = monotone && e > prev;
    prev = e;
  }
  ck.expect("entanglement of formation monotone, E(0) = 0, E(1) = 1",
            monotone && conversion::entanglement_of_formation(0.0) == 0.0 &&
                std::abs(conversion::entanglement_of_formation(1.0) - 1.0) < 1e-15,
            "1001-point grid");
}

void check_simd(Checker& ck, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 1003;
  std::vector<double> a(n), b(n), w(n);
  std::vector<std::complex<double>> ca(n), cb(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = u(rng);
    b[i] = u(rng);
    w[i] = u(rng);
    ca[i] = {u(rng), u(rng)};
    cb[i] = {u(rng), u(rng)};
  }
  const auto& ref = simd::kernels_for(simd::Isa::Scalar);
  for (simd::Isa isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
    if (!simd::isa_available(isa)) continue;
    const auto& k = simd::kernels_for(isa);
    const double e = std::max(std::abs(k.dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)),
                              std::abs(k.weighted_dot_conj(ca.data(), cb.data(), w.data(), n) -
                                       ref.weighted_dot_conj(ca.data(), cb.data(), w.data(), n)));
    ck.below(std::string("SIMD ") + simd::isa_name(isa) + " kernels == scalar reference", e, 1e-12);
  }
}

}  // namespace

ValidateReport run_validate(const ValidateOptions& opts) {
  if (opts.n_max < 1 || opts.n_max > bloch::kMaxDenseSpins) {
    throw DomainError("validate: n_max must be in [1, " + std::to_string(bloch::kMaxDenseSpins) +
                      "], got " + std::to_string(opts.n_max));
  }
  ValidateReport rep;
  Checker ck(rep);
  std::mt19937_64 rng(20240611);
  check_oracle_routes(ck, opts, rng);
  check_convergence(ck, rep);
  check_bloch(ck, rng);
  check_conversion(ck, rng);
  check_simd(ck, rng);
  return rep;
}

}  // namespace qfc::cli
