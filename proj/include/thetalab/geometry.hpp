#pragma once

// Graph and incidence-geometry views of (0,1)-matrices: the configuration
// graph (points adjacent iff not collinear), the neighbourhood geometry
// (adjacency matrix read as an incidence matrix), and the distance and
// triangle statistics used to certify named graphs.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"

namespace thetalab {

/// Girth of a forest and diameter of a disconnected graph.
inline constexpr int kInfinite = std::numeric_limits<int>::max();

class Graph {
 public:
  /// Throws PreconditionError unless the matrix is symmetric with zero diagonal.
  explicit Graph(BinMatrix adjacency) : adj_(std::move(adjacency)) {
    if (!is_symmetric(adj_)) throw PreconditionError("Graph: adjacency matrix is not symmetric");
    if (!has_zero_diagonal(adj_)) throw PreconditionError("Graph: adjacency matrix has a loop");
  }

  [[nodiscard]] std::size_t order() const noexcept { return adj_.order(); }
  [[nodiscard]] const BinMatrix& adjacency() const noexcept { return adj_; }
  [[nodiscard]] BinMatrix::Row neighbours(std::size_t v) const noexcept { return adj_.row(v); }
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_(u, v); }
  [[nodiscard]] std::size_t degree(std::size_t v) const noexcept { return adj_.row_sum(v); }

  [[nodiscard]] std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(order());
    for (std::size_t v = 0; v < order(); ++v) d[v] = degree(v);
    return d;
  }

  [[nodiscard]] bool is_complete() const noexcept {
    for (std::size_t v = 0; v < order(); ++v)
      if (degree(v) + 1 != order()) return false;
    return true;
  }

 private:
  BinMatrix adj_;
};

/// Incidence matrix of an n_k configuration: J2-free, every row and column sum k.
class Configuration {
 public:
  explicit Configuration(BinMatrix incidence) : inc_(std::move(incidence)) {
    const auto k = regular_degree(inc_);
    if (!k) throw NonConstantSums("Configuration: incidence matrix is not regular");
    if (!is_j2_free(inc_)) throw DigonError("Configuration: two points share two lines");
    kappa_ = *k;
  }

  [[nodiscard]] std::size_t order() const noexcept { return inc_.order(); }
  [[nodiscard]] std::int64_t kappa() const noexcept { return kappa_; }
  [[nodiscard]] const BinMatrix& incidence() const noexcept { return inc_; }

 private:
  BinMatrix inc_;
  std::int64_t kappa_ = 0;
};

/// Non-collinearity graph; its adjacency is Theta of the incidence matrix.
inline Graph configuration_graph(const Configuration& c) { return Graph(BinMatrix(theta(c.incidence()))); }

/// Reads the adjacency matrix as an incidence matrix. Throws DigonError when
/// the graph contains a 4-cycle and NonConstantSums when it is not regular.
inline Configuration neighbourhood_geometry(const Graph& g) {
  if (!is_j2_free(g.adjacency())) throw DigonError("neighbourhood geometry contains a digon: the graph has a 4-cycle");
  return Configuration(g.adjacency());
}

inline bool is_n_admissible(const Graph& g) noexcept { return is_j2_free(g.adjacency()); }

/// Breadth-first distances from v; kInfinite for unreachable vertices.
inline std::vector<int> distances_from(const Graph& g, std::size_t v) {
  std::vector<int> dist(g.order(), kInfinite);
  dist[v] = 0;
  BinMatrix::Row seen = BinMatrix::Row{1} << v;
  BinMatrix::Row frontier = seen;
  for (int d = 1; frontier; ++d) {
    BinMatrix::Row next = 0;
    for (auto f = frontier; f; f &= f - 1) next |= g.neighbours(static_cast<std::size_t>(std::countr_zero(f)));
    next &= ~seen;
    for (auto r = next; r; r &= r - 1) dist[static_cast<std::size_t>(std::countr_zero(r))] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

inline int eccentricity(const Graph& g, std::size_t v) {
  const auto d = distances_from(g, v);
  return *std::max_element(d.begin(), d.end());
}

inline int diameter(const Graph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

inline int girth(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  int best = kInfinite;
  std::vector<int> dist(n);
  std::vector<std::size_t> parent(n);
  std::vector<std::size_t> queue;
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInfinite);
    std::fill(parent.begin(), parent.end(), kNone);
    queue.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (auto r = g.neighbours(u); r; r &= r - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(r));
        if (dist[w] == kInfinite) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          // non-tree edge closes a cycle through root of length at most this
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

inline bool is_centre_radius2(const Graph& g, std::size_t v) { return eccentricity(g, v) <= 2; }

struct TriangleCensus {
  std::size_t total = 0;
  std::vector<std::size_t> per_vertex;
};

/// Counts triangles by scanning every vertex triple.
inline TriangleCensus triangle_census(const Graph& g) {
  TriangleCensus t{0, std::vector<std::size_t>(g.order(), 0)};
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) && g.adjacent(b, c)) {
          ++t.total;
          ++t.per_vertex[a];
          ++t.per_vertex[b];
          ++t.per_vertex[c];
        }
      }
    }
  return t;
}

/// Non-complete, and every pair at distance 2 has a common neighbourhood
/// inducing a clique on exactly mu vertices.
inline bool is_terwilliger(const Graph& g, std::size_t mu) {
  if (g.is_complete()) return false;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto dist = distances_from(g, u);
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (dist[v] != 2) continue;
      const auto common = g.neighbours(u) & g.neighbours(v);
      if (static_cast<std::size_t>(std::popcount(common)) != mu) return false;
      for (auto r = common; r; r &= r - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(r));
        const auto others = common & ~(BinMatrix::Row{1} << x);
        if ((g.neighbours(x) & others) != others) return false;
      }
    }
  }
  return true;
}

/// Symmetric incidence matrix with zero diagonal: the configuration has a
/// polarity p_i <-> l_i without absolute elements.
inline bool has_polarity_form(const Configuration& c) noexcept {
  return is_symmetric(c.incidence()) && has_zero_diagonal(c.incidence());
}

}  // namespace thetalab
