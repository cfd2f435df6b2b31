#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"

namespace thetalab {

/// Theta-iteration trace of a matrix in D_n.
///
/// Once an iterate has an entry outside {0,1} every later iterate has a
/// negative diagonal entry, so the trace stops there: no cycle through the
/// input exists.
struct OrbitReport {
  std::vector<IntMatrix> iterates;               ///< iterates[0] is the input
  std::optional<std::size_t> period;             ///< length of the eventual cycle
  std::size_t preperiod = 0;                     ///< steps before the cycle is entered
  std::optional<std::size_t> leaves_class_at;    ///< first step whose iterate is not a (0,1)-matrix

  [[nodiscard]] bool returns_to_input() const noexcept { return period.has_value() && preperiod == 0; }
};

/// Iterates Theta until an iterate repeats, an iterate leaves the (0,1)-matrices,
/// or max_steps is reached (StepLimit). The input must have constant row and
/// column sums (NonConstantSums otherwise).
inline OrbitReport orbit(const BinMatrix& a, std::size_t max_steps) {
  if (!regular_degree(a)) throw NonConstantSums("orbit: row and column sums are not all equal");
  OrbitReport rep;
  std::vector<BinMatrix> seen{a};
  rep.iterates.push_back(a.to_int());
  for (std::size_t step = 1; step <= max_steps; ++step) {
    const auto next = theta_in_class(seen.back());
    if (!next) {
      rep.iterates.push_back(theta(seen.back()));
      rep.leaves_class_at = step;
      return rep;
    }
    rep.iterates.push_back(next->to_int());
    for (std::size_t j = 0; j < seen.size(); ++j)
      if (seen[j] == *next) {
        rep.preperiod = j;
        rep.period = step - j;
        return rep;
      }
    seen.push_back(*next);
  }
  throw StepLimit("orbit: no repetition within " + std::to_string(max_steps) + " steps");
}

/// Theta^m(A) == A. False for inputs outside D_n.
inline bool is_solution(const BinMatrix& a, unsigned m) {
  if (m == 0) throw PreconditionError("is_solution: m must be positive");
  if (!regular_degree(a)) return false;
  BinMatrix cur = a;
  for (unsigned s = 0; s < m; ++s) {
    auto next = theta_in_class(cur);
    if (!next) return false;
    cur = std::move(*next);
  }
  return cur == a;
}

/// Smallest p >= 1 with Theta^p(A) == A, if A lies on a cycle.
inline std::optional<std::size_t> fundamental_period(const BinMatrix& a, std::size_t max_steps = 64) {
  const auto rep = orbit(a, max_steps);
  if (rep.returns_to_input()) return rep.period;
  return std::nullopt;
}

}  // namespace thetalab
