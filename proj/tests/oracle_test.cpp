#include "qfc/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qfc/error.hpp"

using namespace qfc;
using namespace qfc::oracle;
using cd = std::complex<double>;

namespace {

double distance(const ReducedCoefficients& a, const ReducedCoefficients& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.w - b.w), std::abs(a.y - b.y)});
}

}  // namespace

TEST(oracle, identity_cases) {
  for (long n : {1L, 5L, 1000L}) {
    EXPECT_EQ(distance(exact_coefficients(n, {0.4, 0.1}, 1.0, 0.0), {}), 0.0);
    EXPECT_EQ(distance(exact_coefficients(n, 0.0, 1.0, 0.7), {}), 0.0);
  }
  EXPECT_LT(distance(brute_force_coefficients(9, {0.2, 0.9}, 1.0, 0.0), {}), 1e-15);
  EXPECT_LT(distance(brute_force_coefficients(9, 0.0, 1.0, 0.8), {}), 1e-15);
}

TEST(oracle, single_molecule_reduction) {
  for (double r : {0.2, 1.0, 2.5}) {
    for (double a : {0.3, 1.1, 2.9}) {
      const auto c = exact_coefficients(1, r, 1.0, a);
      const double r2 = r * r;
      EXPECT_NEAR(c.x, (1 + r2 * std::cos(a) * std::cos(a)) / (2 * (1 + r2)), 1e-15);
      EXPECT_NEAR(c.w.real(), (1 + r2 * std::cos(a)) / (2 * (1 + r2)), 1e-15);
      // y: one term, -i (s/2) sin(a) / (1 + |s|^2)
      EXPECT_NEAR(c.y.imag(), -0.5 * r * std::sin(a) / (1 + r2), 1e-15);
    }
  }
}

// N = 2, s = 1, G_U t = pi/2: weights (1, 2, 1)/4, couplings sqrt(2) at n = 1, 2.
TEST(oracle, two_molecule_hand_sum) {
  const double a = std::numbers::pi / 2;
  const double ph = a * std::sqrt(2.0);
  const double w = 0.5 * (0.25 + 0.5 * std::cos(ph) + 0.25 * std::cos(ph));
  const double x = 0.5 * (0.25 + 0.75 * std::cos(ph) * std::cos(ph));
  for (const auto& c : {exact_coefficients(2, 1.0, 1.0, a), brute_force_coefficients(2, 1.0, 1.0, a)}) {
    EXPECT_NEAR(c.w.real(), w, 1e-14);
    EXPECT_NEAR(c.x, x, 1e-14);
  }
}

// Frozen from 40-digit mpmath evaluation of the defining sums.
TEST(oracle, high_precision_reference_values) {
  const auto c8 = exact_coefficients(8, {0.5, 0.2}, 1.0, 0.37);
  EXPECT_NEAR(c8.x, 0.10866153624210511, 1e-14);
  EXPECT_NEAR(c8.w.real(), 0.16615104421710115, 1e-14);
  EXPECT_NEAR(c8.y.real(), 0.1577485818226555, 1e-14);
  EXPECT_NEAR(c8.y.imag(), -0.39437145455663875, 1e-14);

  const double t = time_for_angle(512, 0.3, 1.0, 1.0);
  const auto c512 = exact_coefficients(512, 0.3, 1.0, t);
  EXPECT_NEAR(c512.x, 0.14788098059337648, 1e-13);
  EXPECT_NEAR(c512.w.real(), 0.27045277861951251, 1e-13);
  EXPECT_NEAR(c512.y.imag(), -0.41930525168199817, 1e-13);
  EXPECT_NEAR(semiclassical_gap(512, 0.3, 1.0, t), 3.0162568544265462e-4, 1e-13);
}

TEST(oracle, routes_agree) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mag(0.05, 3.0), ph(0.0, 2 * std::numbers::pi),
      ang(0.0, 4.0);
  for (int n : {1, 2, 4, 8, 16, 64, 256}) {
    for (int k = 0; k < 10; ++k) {
      const cd s = std::polar(mag(rng), ph(rng));
      const double t = time_for_angle(n, s, 1.0, ang(rng));
      ASSERT_LT(distance(exact_coefficients(n, s, 1.0, t), brute_force_coefficients(n, s, 1.0, t)),
                1e-10)
          << "N = " << n << " s = " << s << " t = " << t;
    }
  }
}

TEST(oracle, perturbed_route_disagrees) {
  const double t = time_for_angle(16, 0.7, 1.0, 1.0);
  EXPECT_GT(distance(exact_coefficients(16, 0.7, 1.0, t), brute_force_coefficients(16, 0.7, 1.0, t, 1.01)),
            1e-4);
}

TEST(oracle, bounds_and_states) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> mag(0.05, 3.0), ph(0.0, 2 * std::numbers::pi),
      ang(0.0, 6.0);
  for (int k = 0; k < 200; ++k) {
    const long n = 1 + static_cast<long>(mag(rng) * 300);
    const cd s = std::polar(mag(rng), ph(rng));
    const auto c = exact_coefficients(n, s, 1.0, time_for_angle(n, s, 1.0, ang(rng)));
    ASSERT_GE(c.x, -1e-15);
    ASSERT_LE(c.x, 0.5 + 1e-15);
    ASSERT_LE(std::abs(c.w), 0.5 + 1e-15);
    ASSERT_LE(std::abs(c.y), 0.5 + 1e-15);
    for (const auto& m : {rho_idler_mixing(c), rho_idler_up(c)}) {
      Eigen::SelfAdjointEigenSolver<conversion::TwoQubitDensity> es(m, Eigen::EigenvaluesOnly);
      ASSERT_GE(es.eigenvalues().minCoeff(), -1e-12);
      ASSERT_NEAR(m.trace().real(), 1.0, 1e-12);
    }
  }
}

TEST(oracle, truncation_error) {
  for (long n : {16L, 200L, 1024L, 2048L}) {
    for (double r : {0.2, 1.0, 2.2}) {
      const double t = time_for_angle(n, r, 1.0, 1.7);
      const auto a = exact_coefficients(n, r, 1.0, t, {.truncate = true});
      const auto b = exact_coefficients(n, r, 1.0, t, {.truncate = false});
      ASSERT_LT(std::abs(a.x - b.x) / std::abs(b.x), 1e-14);
      ASSERT_LT(std::abs(a.w - b.w) / std::abs(b.w), 1e-14);
      ASSERT_LT(std::abs(a.y - b.y) / std::abs(b.y), 1e-14);
    }
  }
}

TEST(oracle, large_n_is_finite) {
  const double t = time_for_angle(1'000'000, 0.5, 1.0, 1.0);
  const auto c = exact_coefficients(1'000'000, 0.5, 1.0, t);
  EXPECT_NEAR(c.w.real(), 0.5 * std::cos(1.0), 1e-5);
  EXPECT_THROW(exact_coefficients(1'000'001, 0.5, 1.0, t), DomainError);
  EXPECT_THROW(exact_coefficients(0, 0.5, 1.0, t), DomainError);
  EXPECT_THROW(brute_force_coefficients(4097, 0.5, 1.0, t), DomainError);
}

TEST(oracle, gap_scales_as_inverse_n) {
  std::vector<double> gaps;
  for (long n : {64L, 128L, 256L, 512L, 1024L}) {
    gaps.push_back(semiclassical_gap(n, 0.3, 1.0, time_for_angle(n, 0.3, 1.0, 1.0)));
  }
  for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
    EXPECT_GE(gaps[k] / gaps[k + 1], 1.5);
    EXPECT_LE(gaps[k] / gaps[k + 1], 2.5);
  }
  EXPECT_LT(semiclassical_gap(10000, 0.3, 1.0, time_for_angle(10000, 0.3, 1.0, 1.0)), 1e-3);
  EXPECT_EQ(semiclassical_gap(100, 0.3, 1.0, 0.0), 0.0);
}

TEST(oracle, correction_predicts_gap) {
  for (double s : {0.3, 0.6, 1.5}) {
    for (double theta : {0.5, 1.0, 2.0}) {
      const double t = time_for_angle(512, s, 1.0, theta);
      const double gap = exact_coefficients(512, s, 1.0, t).w.real() - semiclassical_w(512, s, 1.0, t);
      EXPECT_NEAR(first_order_correction(512, s, 1.0, t) / gap, 1.0, 0.2)
          << "s = " << s << " theta = " << theta;
    }
  }
}

TEST(oracle, correction_properties) {
  EXPECT_EQ(first_order_correction(100, 0.4, 1.0, 0.0), 0.0);
  EXPECT_LT(std::abs(first_order_correction(100, 0.4, 1.0, 1e-9)), 1e-15);
  for (long n : {64L, 128L, 256L, 512L}) {
    const double a = first_order_correction(n, 0.3, 1.0, time_for_angle(n, 0.3, 1.0, 1.0));
    const double b = first_order_correction(2 * n, 0.3, 1.0, time_for_angle(2 * n, 0.3, 1.0, 1.0));
    EXPECT_GE(a / b, 1.7);
    EXPECT_LE(a / b, 2.3);
  }
  EXPECT_THROW(first_order_correction(100, 0.0, 1.0, 0.1), NumericalError);
  EXPECT_THROW(first_order_correction(100, 1e300, 1.0, 0.1), NumericalError);
  EXPECT_NO_THROW(first_order_correction(100, 1.0, 1.0, 0.1));
}

TEST(oracle, oracle_concurrence_converges) {
  double prev = INFINITY;
  for (long n : {16L, 64L, 256L, 1024L}) {
    const auto c = exact_coefficients(n, 0.3, 1.0, time_for_angle(n, 0.3, 1.0, 1.0));
    const double err = std::abs(conversion::wootters_concurrence(rho_idler_mixing(c)) - std::cos(1.0));
    EXPECT_LT(err, prev) << n;
    prev = err;
  }
}
