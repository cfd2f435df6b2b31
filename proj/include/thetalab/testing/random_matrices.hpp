#pragma once

// Random matrix generators for property tests. Not part of the mathematical
// core: they exist to feed randomized checks with members of Z_{n,k} and D_{n,k}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "thetalab/matrix.hpp"

namespace thetalab::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Integer matrix with every row and column sum equal to kappa: kappa times a
/// circulant shift, followed by random moves +1/-1/-1/+1 on the corners of a
/// rectangle.
inline IntMatrix random_z_matrix(std::size_t n, std::int64_t kappa, std::size_t moves, Rng& rng) {
  IntMatrix a(n);
  const std::size_t shift = uniform(rng, 0, n - 1);
  for (std::size_t i = 0; i < n; ++i) a(i, (i + shift) % n) = kappa;
  if (n < 2) return a;
  for (std::size_t t = 0; t < moves; ++t) {
    const std::size_t i = uniform(rng, 0, n - 1);
    const std::size_t k = (i + uniform(rng, 1, n - 1)) % n;
    const std::size_t j = uniform(rng, 0, n - 1);
    const std::size_t l = (j + uniform(rng, 1, n - 1)) % n;
    a(i, j) += 1;
    a(i, l) -= 1;
    a(k, j) -= 1;
    a(k, l) += 1;
  }
  return a;
}

/// (0,1)-matrix with every row and column sum kappa (0 <= kappa <= n): a sum
/// of kappa distinct circulant shifts with rows shuffled, then random
/// sum-preserving switches.
inline BinMatrix random_d_matrix(std::size_t n, std::size_t kappa, std::size_t switches, Rng& rng) {
  std::vector<std::size_t> shifts(n);
  for (std::size_t s = 0; s < n; ++s) shifts[s] = s;
  std::shuffle(shifts.begin(), shifts.end(), rng);
  std::vector<std::size_t> row_order(n);
  for (std::size_t i = 0; i < n; ++i) row_order[i] = i;
  std::shuffle(row_order.begin(), row_order.end(), rng);
  BinMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < kappa; ++s) a.set(row_order[i], (i + shifts[s]) % n);
  if (n < 2) return a;
  for (std::size_t t = 0; t < switches; ++t) {
    const std::size_t i = uniform(rng, 0, n - 1);
    const std::size_t k = uniform(rng, 0, n - 1);
    const std::size_t j = uniform(rng, 0, n - 1);
    const std::size_t l = uniform(rng, 0, n - 1);
    if (a(i, j) && a(k, l) && !a(i, l) && !a(k, j)) {
      a.set(i, j, false);
      a.set(k, l, false);
      a.set(i, l);
      a.set(k, j);
    }
  }
  return a;
}

/// Symmetric (0,1)-matrix with zero diagonal and every row sum kappa, from
/// random edge switches applied to a circulant graph; requires n*kappa even
/// and kappa < n.
inline BinMatrix random_regular_graph(std::size_t n, std::size_t kappa, std::size_t switches, Rng& rng) {
  BinMatrix a(n);
  // circulant: +-1, +-2, ..., plus n/2 when kappa is odd
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 1; d <= kappa / 2; ++d) {
      a.set(i, (i + d) % n);
      a.set((i + d) % n, i);
    }
    if (kappa % 2 == 1) {
      a.set(i, (i + n / 2) % n);
      a.set((i + n / 2) % n, i);
    }
  }
  for (std::size_t t = 0; t < switches; ++t) {
    // edges u-v, x-y become u-x, v-y
    const std::size_t u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
    const std::size_t x = uniform(rng, 0, n - 1), y = uniform(rng, 0, n - 1);
    if (!a(u, v) || !a(x, y)) continue;
    if (u == x || u == y || v == x || v == y) continue;
    if (a(u, x) || a(v, y)) continue;
    a.set(u, v, false), a.set(v, u, false), a.set(x, y, false), a.set(y, x, false);
    a.set(u, x), a.set(x, u), a.set(v, y), a.set(y, v);
  }
  return a;
}

inline BinMatrix random_binary(std::size_t n, double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  BinMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) a.set(i, j);
  return a;
}

}  // namespace thetalab::testing
