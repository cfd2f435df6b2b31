#pragma once

// Independent enumeration of all k-regular graphs without 4-cycles on n
// vertices, used to cross-check the standard-form classifier.
//
// Graphs are generated in breadth-first labelling: vertices are processed in
// label order, and the neighbours a vertex gains that were not seen before
// receive the next unused labels. Every graph has such a labelling, so the
// enumeration is complete; isomorphic copies are merged by canonical form.
// No centre or standard-form structure is assumed.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "thetalab/canonical.hpp"
#include "thetalab/classify.hpp"
#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"
#include "thetalab/orbit.hpp"

namespace thetalab {

namespace detail {

class RegularC4FreeCensus {
 public:
  using Row = BinMatrix::Row;

  RegularC4FreeCensus(std::size_t n, std::size_t k) : n_(n), k_(k), adj_(n, 0), deg_(n, 0) {}

  CanonicalSet run() {
    vertex(0, 0);
    return found_;
  }

  [[nodiscard]] std::uint64_t labelled_graphs() const noexcept { return labelled_; }

 private:
  [[nodiscard]] bool keeps_c4_free(std::size_t u, std::size_t w) const noexcept {
    for (Row r = adj_[w]; r; r &= r - 1)
      if (adj_[u] & adj_[static_cast<std::size_t>(std::countr_zero(r))]) return false;
    for (Row r = adj_[u]; r; r &= r - 1)
      if (adj_[w] & adj_[static_cast<std::size_t>(std::countr_zero(r))]) return false;
    return true;
  }

  void link(std::size_t u, std::size_t w, bool on) noexcept {
    const Row bu = Row{1} << u;
    const Row bw = Row{1} << w;
    if (on) {
      adj_[u] |= bw;
      adj_[w] |= bu;
      ++deg_[u];
      ++deg_[w];
    } else {
      adj_[u] &= ~bw;
      adj_[w] &= ~bu;
      --deg_[u];
      --deg_[w];
    }
  }

  // Vertex v gets its remaining neighbours; `discovered` labels are in use.
  void vertex(std::size_t v, std::size_t discovered) {
    if (v == n_) {
      ++labelled_;
      found_.insert(canonical_form(BinMatrix::from_rows(n_, adj_)).canonical_matrix);
      return;
    }
    if (discovered <= v) discovered = v + 1;  // new component rooted at v
    pick_old(v, v + 1, discovered, k_ - deg_[v]);
  }

  // Chooses already-discovered neighbours above v, then tops up with fresh labels.
  void pick_old(std::size_t v, std::size_t from, std::size_t discovered, std::size_t need) {
    add_fresh(v, discovered, need);
    if (need == 0) return;
    for (std::size_t u = from; u < discovered; ++u) {
      if (deg_[u] >= k_ || (adj_[v] >> u & 1U) || !keeps_c4_free(v, u)) continue;
      link(v, u, true);
      pick_old(v, u + 1, discovered, need - 1);
      link(v, u, false);
    }
  }

  void add_fresh(std::size_t v, std::size_t discovered, std::size_t need) {
    if (discovered + need > n_) return;
    std::size_t added = 0;
    bool ok = true;
    for (; added < need; ++added) {
      const std::size_t w = discovered + added;
      if (!keeps_c4_free(v, w)) {
        ok = false;
        break;
      }
      link(v, w, true);
    }
    if (ok) vertex(v + 1, discovered + need);
    for (std::size_t i = 0; i < added; ++i) link(v, discovered + i, false);
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<Row> adj_;
  std::vector<std::size_t> deg_;
  CanonicalSet found_;
  std::uint64_t labelled_ = 0;
};

}  // namespace detail

/// Canonical forms of all k-regular graphs on n vertices without 4-cycles.
inline CanonicalSet regular_c4_free_graphs(std::size_t n, std::size_t k, std::uint64_t* labelled = nullptr) {
  if (n == 0 || n > 24) throw PreconditionError("census: order must be between 1 and 24");
  detail::RegularC4FreeCensus census(n, k);
  auto out = census.run();
  if (labelled) *labelled = census.labelled_graphs();
  return out;
}

/// Classes of solutions of Theta^m(A) = A among all k-regular C4-free graphs
/// on k^2+1 vertices, by exhaustive census instead of standard forms.
inline CanonicalSet census_solutions(int kappa, unsigned m) {
  if (kappa < 1) throw PreconditionError("census: kappa must be positive");
  const auto k = static_cast<std::size_t>(kappa);
  CanonicalSet out;
  for (const auto& g : regular_c4_free_graphs(k * k + 1, k))
    if (is_solution(g, m)) out.insert(g);
  return out;
}

}  // namespace thetalab
