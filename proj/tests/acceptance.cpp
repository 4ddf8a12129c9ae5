// Acceptance report: one PASS/FAIL line per criterion, tolerances pinned here.
// Usage: acceptance [criterion]   (no argument runs all and exits 0)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "qfc/commands.hpp"
#include "qfc/conversion.hpp"
#include "qfc/oracle.hpp"
#include "qfc/params.hpp"
#include "qfc/srs.hpp"

using namespace qfc;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

params::ExperimentConfig config() { return params::load_config(QFC_DEFAULT_CONFIG); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome c1_table() {
  const auto rows = cli::derive_rows(config());
  struct Tol {
    const char* name;
    double pct;
  };
  const Tol tols[] = {{"N (molecules)", 0.1}, {"quantization volume", 0.2}, {"kappa1_p", 0.2},
                      {"kappa1_u", 0.2},      {"G_S", 0.3},                 {"G_U", 0.3},
                      {"alpha_P(0)", 0.5}};
  Outcome o{true, ""};
  double worst = 0.0;
  for (const auto& t : tols) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.name == t.name; });
    if (it == rows.end() || !it->deviation_pct()) return {false, std::string("missing ") + t.name};
    const double dev = std::abs(*it->deviation_pct());
    worst = std::max(worst, dev / t.pct);
    if (dev > t.pct) {
      o.pass = false;
      o.detail += std::string(t.name) + fmt(" off by %.3f%% ", dev);
    }
  }
  o.detail += fmt("worst deviation %.3f of its tolerance", worst);
  return o;
}

Outcome c2_crossing() {
  const auto cfg = config();
  const auto r = cli::run_convert(cfg, srs::kDefaultSteps, srs::XiMode::Eom);
  const std::size_t k = r.crossing;
  const bool same = k == conversion::concurrence_crossing_index(r.trace);
  const double z = r.trace.z[k];
  return {same && z >= 0.30 && z <= 0.46,
          fmt("crossing z = %.4f m (want [0.30, 0.46]); theta(L) = %.3g rad; indices equal: ", z,
              r.trace.theta.back()) +
              (same ? "yes" : "no")};
}

Outcome c3_identities() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> th(0.0, 100.0);
  double worst = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double theta = th(rng);
    const auto p = conversion::photon_numbers(conversion::evolve_bell(theta, th(rng)));
    const auto c = conversion::concurrence_closed_form(theta);
    worst = std::max({worst, std::abs(p.n_m + p.n_u - 0.5), std::abs(p.n_i - 0.5),
                      std::abs(c.c_im * c.c_im + c.c_iu * c.c_iu - 1.0)});
  }
  return {worst <= 1e-12, fmt("max identity error %.2e over 1e5 samples (tol 1e-12)", worst)};
}

Outcome c4_wootters() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double theta = th(rng);
    const auto st = conversion::evolve_bell(theta, th(rng));
    const auto c = conversion::concurrence_closed_form(theta);
    worst = std::max({worst,
                      std::abs(conversion::wootters_concurrence(conversion::reduce_idler_mixing(st)) - c.c_im),
                      std::abs(conversion::wootters_concurrence(conversion::reduce_idler_up(st)) - c.c_iu)});
  }
  return {worst <= 1e-10, fmt("max |C_wootters - C_closed| = %.2e over 200 samples (tol 1e-10)", worst)};
}

Outcome c5_oracles() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mag(0.05, 3.0), ph(0.0, 2.0 * std::numbers::pi), ang(0.0, 4.0);
  double worst = 0.0;
  for (int n : {1, 2, 4, 8, 16, 64, 256}) {
    for (int k = 0; k < 10; ++k) {
      const cd s = std::polar(mag(rng), ph(rng));
      const double t = oracle::time_for_angle(n, s, 1.0, ang(rng));
      const auto a = oracle::exact_coefficients(n, s, 1.0, t);
      const auto b = oracle::brute_force_coefficients(n, s, 1.0, t);
      worst = std::max({worst, std::abs(a.x - b.x), std::abs(a.w - b.w), std::abs(a.y - b.y)});
    }
  }
  return {worst <= 1e-10, fmt("max component difference %.2e over 70 points (tol 1e-10)", worst)};
}

Outcome c6_semiclassical() {
  const double s = cli::kGapStudyS, theta = cli::kGapStudyTheta;
  const auto gap = [&](long n) {
    return oracle::semiclassical_gap(n, s, 1.0, oracle::time_for_angle(n, s, 1.0, theta));
  };
  bool pass = true;
  std::string ratios;
  for (long n : {64L, 128L, 256L, 512L}) {
    const double r = gap(n) / gap(2 * n);
    pass = pass && r >= 1.5 && r <= 2.5;
    ratios += fmt("%.4f ", r);
  }
  const double g4 = gap(10000);
  pass = pass && g4 < 1e-3;
  const double t512 = oracle::time_for_angle(512, s, 1.0, theta);
  const double signed_gap =
      oracle::exact_coefficients(512, s, 1.0, t512).w.real() - oracle::semiclassical_w(512, s, 1.0, t512);
  const double rel = std::abs(oracle::first_order_correction(512, s, 1.0, t512) / signed_gap - 1.0);
  pass = pass && rel <= 0.2;
  return {pass, "ratios " + ratios + fmt("(want [1.5, 2.5]); gap(1e4) = %.2e (< 1e-3); correction rel err %.4f (<= 0.2)", g4, rel)};
}

Outcome c7_trend() {
  cli::ScanOptions o;
  o.e_min = 40e-6;
  o.e_max = 200e-6;
  o.energies = 9;
  const auto r = cli::run_scan(config(), o);
  bool monotone = true;
  for (std::size_t k = 1; k < r.crossing_z.size(); ++k) monotone = monotone && r.crossing_z[k] <= r.crossing_z[k - 1];
  std::set<double> distinct(r.crossing_z.begin(), r.crossing_z.end());
  return {monotone && distinct.size() >= 3,
          fmt("crossing_z from %.4f m to %.4f m, %g distinct values (want >= 3); non-increasing: ",
              r.crossing_z.front(), r.crossing_z.back(), static_cast<double>(distinct.size())) +
              (monotone ? "yes" : "no")};
}

Outcome c8_shape() {
  const auto cfg = config();
  const auto p = srs::propagate_fields(params::derive_params(cfg), cfg);
  double min_early = 1.0, conservation = 0.0;
  const double total = p.alpha_p[0] * p.alpha_p[0] + p.alpha_s[0] * p.alpha_s[0];
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.z[k] < 0.25) min_early = std::min(min_early, p.alpha_p[k] / p.alpha_p0);
    const double now = p.alpha_p[k] * p.alpha_p[k] + p.alpha_s[k] * p.alpha_s[k];
    conservation = std::max(conservation, std::abs(now - total) / total);
  }
  const double end = p.alpha_p.back() / p.alpha_p0;
  return {min_early > 0.9 && end < 0.5 && conservation <= 1e-6,
          fmt("min pump (z < 0.25) %.4f (> 0.9); pump(0.6) %.4f (< 0.5); conservation %.2e (<= 1e-6)",
              min_early, end, conservation)};
}

Outcome c9_order() {
  const auto cfg = config();
  const auto d = params::derive_params(cfg);
  double a[3];
  const std::size_t steps[] = {1000, 2000, 4000};
  for (int i = 0; i < 3; ++i) a[i] = srs::propagate_fields(d, cfg, steps[i]).alpha_s.back();
  const double order = std::log2(std::abs(a[0] - a[1]) / std::abs(a[1] - a[2]));
  return {order >= 3.5, fmt("observed order %.3f on alpha_S(L), 1000/2000/4000 steps (want >= 3.5)", order)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::function<Outcome()> criteria[] = {c1_table,   c2_crossing,      c3_identities,
                                               c4_wootters, c5_oracles,      c6_semiclassical,
                                               c7_trend,   c8_shape,         c9_order};
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 9) {
      std::fprintf(stderr, "criterion must be 1..9\n");
      return 2;
    }
  }
  bool all = true;
  for (int i = 1; i <= 9; ++i) {
    if (only && i != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s c%d %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i, o.detail.c_str(), secs);
    all = all && o.pass;
  }
  return only && !all ? 1 : 0;
}
