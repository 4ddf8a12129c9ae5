#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace qfc::logmath {

namespace detail {
inline constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();
}  // namespace detail

/// log(n!). Exact table up to 20!, log-gamma beyond.
inline double log_factorial(std::int64_t n) {
  if (n <= 20) return std::log(static_cast<double>(detail::kFactorials[static_cast<std::size_t>(n)]));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

/// log C(n, k) for 0 <= k <= n.
inline double log_choose(std::int64_t n, std::int64_t k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace qfc::logmath
