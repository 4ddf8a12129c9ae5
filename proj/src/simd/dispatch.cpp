#include <atomic>
#include <cstdlib>
#include <string_view>

#include "qfc/error.hpp"
#include "qfc/simd/kernels.hpp"

namespace qfc::simd {

namespace {

bool cpu_has_avx2_fma() {
#if defined(QFC_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return has;
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("QFCSIM_SIMD")) {
    if (std::string_view(env) == "scalar") return Isa::Scalar;
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpu_has_avx2_fma();
    case Isa::Neon:
#if defined(QFC_HAVE_NEON_TU)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw DomainError(std::string("SIMD variant `") + isa_name(isa) + "` is not available here");
  }
  active().store(isa, std::memory_order_relaxed);
}

const Kernels& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw DomainError(std::string("SIMD variant `") + isa_name(isa) + "` is not available here");
  }
  switch (isa) {
#if defined(QFC_HAVE_AVX2_TU)
    case Isa::Avx2: return detail::kAvx2Kernels;
#endif
#if defined(QFC_HAVE_NEON_TU)
    case Isa::Neon: return detail::kNeonKernels;
#endif
    default: return detail::kScalarKernels;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("dot: length mismatch");
  return kernels_for(active_isa()).dot(a.data(), b.data(), a.size());
}

std::complex<double> weighted_dot_conj(std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b,
                                       std::span<const double> w) {
  if (a.size() != b.size() || a.size() != w.size()) {
    throw DomainError("weighted_dot_conj: length mismatch");
  }
  return kernels_for(active_isa()).weighted_dot_conj(a.data(), b.data(), w.data(), a.size());
}

}  // namespace qfc::simd
