#include "qfc/simd/kernels.hpp"

namespace qfc::simd::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

std::complex<double> weighted_dot_conj_scalar(const std::complex<double>* a,
                                              const std::complex<double>* b, const double* w,
                                              std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += w[i] * (ar * br + ai * bi);
    im += w[i] * (ar * bi - ai * br);
  }
  return {re, im};
}

}  // namespace

const Kernels kScalarKernels{&dot_scalar, &weighted_dot_conj_scalar};

}  // namespace qfc::simd::detail
