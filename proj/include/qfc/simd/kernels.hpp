#pragma once

// Reduction kernels used by the inner loops of the exact-sum oracle and the
// Dicke-state expectation values. Each kernel has a portable scalar reference
// and, where the target supports it, an AVX2+FMA or NEON variant. The variant
// is chosen once at startup from CPUID (overridable with QFCSIM_SIMD=scalar).
//
// Vector variants reorder the summation, so results match the scalar
// reference to rounding (≈1e-15 relative), not bitwise. For a fixed ISA the
// result is deterministic.

#include <complex>
#include <span>

namespace qfc::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);

/// True when this build contains the variant and the CPU can run it.
bool isa_available(Isa isa);

/// The ISA the dispatched entry points below currently route to.
Isa active_isa();

/// Forces dispatch to `isa`. Throws DomainError when unavailable.
void set_active_isa(Isa isa);

struct Kernels {
  /// sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// sum_i conj(a[i]) * b[i] * w[i]
  std::complex<double> (*weighted_dot_conj)(const std::complex<double>* a,
                                            const std::complex<double>* b, const double* w,
                                            std::size_t n);
};

/// Kernel table for a specific ISA, for equivalence testing.
const Kernels& kernels_for(Isa isa);

double dot(std::span<const double> a, std::span<const double> b);
std::complex<double> weighted_dot_conj(std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b,
                                       std::span<const double> w);

namespace detail {
extern const Kernels kScalarKernels;
#if defined(QFC_HAVE_AVX2_TU)
extern const Kernels kAvx2Kernels;
#endif
#if defined(QFC_HAVE_NEON_TU)
extern const Kernels kNeonKernels;
#endif
}  // namespace detail

}  // namespace qfc::simd
