#include <arm_neon.h>

#include "qfc/simd/kernels.hpp"

namespace qfc::simd::detail {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

std::complex<double> weighted_dot_conj_neon(const std::complex<double>* a,
                                            const std::complex<double>* b, const double* w,
                                            std::size_t n) {
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  float64x2_t acc_re = vdupq_n_f64(0.0);  // w*ar*br, w*ai*bi
  float64x2_t acc_im = vdupq_n_f64(0.0);  // w*ar*bi, w*ai*br
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t va = vmulq_n_f64(vld1q_f64(pa + 2 * i), w[i]);
    const float64x2_t vb = vld1q_f64(pb + 2 * i);
    acc_re = vfmaq_f64(acc_re, va, vb);
    acc_im = vfmaq_f64(acc_im, va, vextq_f64(vb, vb, 1));
  }
  const double re = vgetq_lane_f64(acc_re, 0) + vgetq_lane_f64(acc_re, 1);
  const double im = vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1);
  return {re, im};
}

}  // namespace

const Kernels kNeonKernels{&dot_neon, &weighted_dot_conj_neon};

}  // namespace qfc::simd::detail
