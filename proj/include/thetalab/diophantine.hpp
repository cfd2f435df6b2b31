#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"

namespace thetalab {

enum class DioFamily {
  kSquarePlusOne,     ///< n = k^2 + 1, any m
  kShiftedSquare,     ///< n = (k-1)^2 + 2, m even
  kException,
};

struct DioSolution {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t kappa = 0;
  DioFamily family = DioFamily::kException;
};

struct DioSweep {
  std::vector<DioSolution> square_plus_one;
  std::vector<DioSolution> shifted_square;
  std::vector<DioSolution> exceptions;

  [[nodiscard]] std::size_t total() const noexcept {
    return square_plus_one.size() + shifted_square.size() + exceptions.size();
  }
};

/// delta iterated m times at fixed n; nullopt once the value provably cannot
/// return to any integer of absolute value <= bound.
inline std::optional<std::int64_t> delta_iterate(std::int64_t n, std::int64_t kappa, std::int64_t m,
                                                 std::int64_t bound) {
  // For |x| >= max(n + 2, 3), |delta(x)| >= (|x| - 1)^2 + 2 > |x|: the orbit escapes.
  const std::int64_t escape = std::max({n + 2, bound + 1, std::int64_t{3}});
  std::int64_t x = kappa;
  for (std::int64_t s = 0; s < m; ++s) {
    if (std::llabs(x) >= escape) return std::nullopt;
    x = delta(n, x);
  }
  return x;
}

inline DioFamily dio_family(std::int64_t n, std::int64_t m, std::int64_t kappa) noexcept {
  if (n == kappa * kappa + 1) return DioFamily::kSquarePlusOne;
  if (n == (kappa - 1) * (kappa - 1) + 2 && m % 2 == 0) return DioFamily::kShiftedSquare;
  return DioFamily::kException;
}

/// Every (n, m, k) with 1 <= n <= n_max, 1 <= m <= m_max, k_lo <= k <= k_hi
/// and delta^m(k) = k, split by family.
inline DioSweep dio_sweep(std::int64_t n_max, std::int64_t m_max, std::int64_t kappa_lo, std::int64_t kappa_hi) {
  if (n_max < 1 || m_max < 1 || kappa_lo > kappa_hi) throw PreconditionError("dio_sweep: empty or invalid bounds");
  const std::int64_t bound = std::max(std::llabs(kappa_lo), std::llabs(kappa_hi));
  DioSweep out;
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t m = 1; m <= m_max; ++m)
      for (std::int64_t k = kappa_lo; k <= kappa_hi; ++k) {
        const auto v = delta_iterate(n, k, m, bound);
        if (!v || *v != k) continue;
        DioSolution s{n, m, k, dio_family(n, m, k)};
        switch (s.family) {
          case DioFamily::kSquarePlusOne: out.square_plus_one.push_back(s); break;
          case DioFamily::kShiftedSquare: out.shifted_square.push_back(s); break;
          case DioFamily::kException: out.exceptions.push_back(s); break;
        }
      }
  return out;
}

}  // namespace thetalab
