#include "qfc/simd/kernels.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "qfc/error.hpp"

using namespace qfc;
using cd = std::complex<double>;

namespace {

std::vector<simd::Isa> available_vector_isas() {
  std::vector<simd::Isa> out;
  for (auto isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
    if (simd::isa_available(isa)) out.push_back(isa);
  }
  return out;
}

}  // namespace

TEST(simd, scalar_reference_values) {
  const auto& k = simd::kernels_for(simd::Isa::Scalar);
  const double a[] = {1, 2, 3};
  const double b[] = {4, -5, 6};
  EXPECT_EQ(k.dot(a, b, 3), 12.0);
  const cd ca[] = {{1, 2}, {0, -1}};
  const cd cb[] = {{3, -1}, {2, 2}};
  const double w[] = {0.5, 2.0};
  // conj(1+2i)(3-i)/2 + conj(-i)(2+2i)*2 = (1-7i)/2 + (-4+4i)
  EXPECT_EQ(k.weighted_dot_conj(ca, cb, w, 2), cd(-3.5, 0.5));
}

TEST(simd, variants_match_scalar) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto& ref = simd::kernels_for(simd::Isa::Scalar);
  for (auto isa : available_vector_isas()) {
    const auto& k = simd::kernels_for(isa);
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 64, 1001, 4097}) {
      std::vector<double> a(n), b(n), w(n);
      std::vector<cd> ca(n), cb(n);
      double scale = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = u(rng);
        b[i] = u(rng);
        w[i] = u(rng);
        ca[i] = {u(rng), u(rng)};
        cb[i] = {u(rng), u(rng)};
        scale += std::abs(a[i] * b[i]) + std::abs(w[i]) * std::abs(ca[i]) * std::abs(cb[i]);
      }
      const double tol = 1e-15 * (scale + 1.0);
      ASSERT_NEAR(k.dot(a.data(), b.data(), n), ref.dot(a.data(), b.data(), n), tol)
          << simd::isa_name(isa) << " n = " << n;
      ASSERT_NEAR(std::abs(k.weighted_dot_conj(ca.data(), cb.data(), w.data(), n) -
                           ref.weighted_dot_conj(ca.data(), cb.data(), w.data(), n)),
                  0.0, tol)
          << simd::isa_name(isa) << " n = " << n;
    }
  }
}

TEST(simd, dispatch_switch) {
  const auto before = simd::active_isa();
  const std::vector<double> a{1, 2, 3, 4, 5}, b{5, 4, 3, 2, 1};
  simd::set_active_isa(simd::Isa::Scalar);
  EXPECT_EQ(simd::active_isa(), simd::Isa::Scalar);
  EXPECT_EQ(simd::dot(a, b), 35.0);
  for (auto isa : available_vector_isas()) {
    simd::set_active_isa(isa);
    EXPECT_EQ(simd::dot(a, b), 35.0);
  }
  simd::set_active_isa(before);
}

TEST(simd, unavailable_variant_rejected) {
#if defined(__x86_64__)
  EXPECT_FALSE(simd::isa_available(simd::Isa::Neon));
  EXPECT_THROW(simd::set_active_isa(simd::Isa::Neon), DomainError);
#elif defined(__aarch64__)
  EXPECT_FALSE(simd::isa_available(simd::Isa::Avx2));
  EXPECT_THROW(simd::set_active_isa(simd::Isa::Avx2), DomainError);
#endif
}

TEST(simd, length_mismatch_rejected) {
  const std::vector<double> a{1, 2}, b{1};
  EXPECT_THROW(simd::dot(a, b), DomainError);
}
