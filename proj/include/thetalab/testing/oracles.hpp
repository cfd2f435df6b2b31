#pragma once

// Brute-force reference computations, deliberately free of any code path the
// library uses for the same question.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "thetalab/matrix.hpp"
#include "thetalab/permutation.hpp"

namespace thetalab::testing {

/// Scans all n! relabellings for one with B[pi(i)][pi(j)] == A[i][j].
inline std::optional<Permutation> brute_force_p_equivalence(const BinMatrix& a, const BinMatrix& b) {
  if (a.order() != b.order()) return std::nullopt;
  const std::size_t n = a.order();
  if (a.ones() != b.ones()) return std::nullopt;
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a(i, j) == b(img[i], img[j]);
    if (ok) return Permutation(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

/// Triangles of a simple graph as trace(A^3) / 6.
inline std::int64_t triangles_by_trace(const BinMatrix& adj) {
  const IntMatrix a = adj.to_int();
  const IntMatrix cube = a * a * a;
  std::int64_t tr = 0;
  for (std::size_t i = 0; i < cube.order(); ++i) tr += cube(i, i);
  return tr / 6;
}

/// Entry-by-entry evaluation of (k-1) I + J - A A^T with explicit products.
inline IntMatrix theta_by_definition(const IntMatrix& a, std::int64_t kappa) {
  const std::size_t n = a.order();
  return (kappa - 1) * IntMatrix::identity(n) + IntMatrix::all_ones(n) - a * a.transpose();
}

}  // namespace thetalab::testing
