// Compiled with -mavx2 -mfma. Only reached through dispatch after a CPUID
// check, so nothing here may be inlined into baseline translation units.

#include <immintrin.h>

#include "qfc/simd/kernels.hpp"

namespace qfc::simd::detail {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

std::complex<double> weighted_dot_conj_avx2(const std::complex<double>* a,
                                            const std::complex<double>* b, const double* w,
                                            std::size_t n) {
  // Two complex numbers per register: [re0, im0, re1, im1].
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();  // w*ar*br, w*ai*bi
  __m256d acc_im = _mm256_setzero_pd();  // w*ar*bi, w*ai*br
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    const __m256d vb_swapped = _mm256_permute_pd(vb, 0b0101);
    const __m128d w2 = _mm_loadu_pd(w + i);
    const __m256d vw = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0b01010000);
    const __m256d wa = _mm256_mul_pd(vw, va);
    acc_re = _mm256_fmadd_pd(wa, vb, acc_re);
    acc_im = _mm256_fmadd_pd(wa, vb_swapped, acc_im);
  }
  alignas(32) double r[4];
  alignas(32) double m[4];
  _mm256_store_pd(r, acc_re);
  _mm256_store_pd(m, acc_im);
  double re = (r[0] + r[2]) + (r[1] + r[3]);
  double im = (m[0] + m[2]) - (m[1] + m[3]);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += w[i] * (ar * br + ai * bi);
    im += w[i] * (ar * bi - ai * br);
  }
  return {re, im};
}

}  // namespace

const Kernels kAvx2Kernels{&dot_avx2, &weighted_dot_conj_avx2};

}  // namespace qfc::simd::detail
