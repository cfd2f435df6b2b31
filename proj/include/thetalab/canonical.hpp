#pragma once

// Canonical labelling of (0,1)-matrices under simultaneous row/column
// permutation. The matrix is read as a directed graph with loops (entry
// (i, j) = arc i -> j), vertex colours are refined to an equitable partition,
// and the search individualises each vertex of the first smallest
// non-singleton cell in turn. Among the discrete leaves the labelling whose
// conjugate has the lexicographically smallest row-major bit string wins.
// Refinement and cell selection depend only on colours, never on labels, so
// the leaf set of A and of any conjugate of A coincide up to relabelling.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "thetalab/matrix.hpp"
#include "thetalab/permutation.hpp"

namespace thetalab {

struct CanonicalCertificate {
  BinMatrix canonical_matrix;
  Permutation witness;  ///< conjugate(input, witness) == canonical_matrix
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const BinMatrix& a) : a_(a), at_(a.transpose()), n_(a.order()) {}

  CanonicalCertificate run() {
    std::vector<std::size_t> colour(n_, 0);
    refine(colour);
    search(colour);
    return {best_matrix_, *best_perm_};
  }

 private:
  // One signature per vertex: current colour, loop bit, then the sorted
  // colours of out-neighbours and of in-neighbours.
  using Signature = std::tuple<std::size_t, bool, std::vector<std::size_t>, std::vector<std::size_t>>;

  std::vector<std::size_t> neighbour_colours(BinMatrix::Row r, const std::vector<std::size_t>& colour) const {
    std::vector<std::size_t> out;
    for (; r; r &= r - 1) out.push_back(colour[static_cast<std::size_t>(std::countr_zero(r))]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Replaces colours by ranks of the signatures until the number of cells stops growing.
  void refine(std::vector<std::size_t>& colour) const {
    std::size_t cells = count_cells(colour);
    std::vector<Signature> sig(n_);
    while (true) {
      for (std::size_t v = 0; v < n_; ++v)
        sig[v] = {colour[v], a_(v, v), neighbour_colours(a_.row(v), colour), neighbour_colours(at_.row(v), colour)};
      std::vector<Signature> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t v = 0; v < n_; ++v)
        colour[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                             distinct.begin());
      if (distinct.size() == cells) return;
      cells = distinct.size();
    }
  }

  static std::size_t count_cells(const std::vector<std::size_t>& colour) {
    std::vector<std::size_t> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Colours are dense ranks 0..cells-1; cell positions follow colour order, so
  // a discrete colouring is itself the relabelling. Children of a node that lie
  // in one orbit of the automorphisms found so far fixing the individualised
  // prefix pointwise have identical subtrees, and only the first is explored.
  void search(const std::vector<std::size_t>& colour) {
    std::vector<std::size_t> size(n_, 0);
    for (auto c : colour) ++size[c];
    std::optional<std::size_t> target;
    for (std::size_t c = 0; c < n_; ++c)
      if (size[c] > 1 && (!target || size[c] < size[*target])) target = c;

    if (!target) {
      visit_leaf(colour);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour[v] != *target) continue;
      if (!tried.empty()) {
        const auto orbit = prefix_stabiliser_orbits();
        const bool redundant =
            std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return orbit[u] == orbit[v]; });
        if (redundant) continue;
      }
      tried.push_back(v);
      std::vector<std::size_t> next(n_);
      for (std::size_t w = 0; w < n_; ++w) next[w] = 2 * colour[w] + ((w == v || colour[w] != *target) ? 0 : 1);
      refine(next);
      prefix_.push_back(v);
      search(next);
      prefix_.pop_back();
    }
  }

  void visit_leaf(const std::vector<std::size_t>& colour) {
    Permutation p(colour);
    BinMatrix m = conjugate(a_, p);
    if (!best_perm_) {
      first_matrix_ = m;
      first_perm_ = p;
      best_matrix_ = std::move(m);
      best_perm_ = std::move(p);
      return;
    }
    if (m == first_matrix_) automorphisms_.push_back(first_perm_->inverse().after(p));
    const int cmp = compare_lex(m, best_matrix_);
    if (cmp == 0 && !(m == first_matrix_)) automorphisms_.push_back(best_perm_->inverse().after(p));
    if (cmp < 0) {
      best_matrix_ = std::move(m);
      best_perm_ = std::move(p);
    }
  }

  // Orbit representative of every vertex under the known automorphisms that fix the prefix.
  std::vector<std::size_t> prefix_stabiliser_orbits() const {
    std::vector<std::size_t> parent(n_);
    for (std::size_t i = 0; i < n_; ++i) parent[i] = i;
    const auto find = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms_) {
      const bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&g](std::size_t v) { return g(v) == v; });
      if (!fixes) continue;
      for (std::size_t i = 0; i < n_; ++i) parent[find(i)] = find(g(i));
    }
    std::vector<std::size_t> rep(n_);
    for (std::size_t i = 0; i < n_; ++i) rep[i] = find(i);
    return rep;
  }

  const BinMatrix& a_;
  BinMatrix at_;
  std::size_t n_;
  BinMatrix best_matrix_;
  std::optional<Permutation> best_perm_;
  BinMatrix first_matrix_;
  std::optional<Permutation> first_perm_;
  std::vector<Permutation> automorphisms_;
  std::vector<std::size_t> prefix_;
};

}  // namespace detail

inline CanonicalCertificate canonical_form(const BinMatrix& a) { return detail::Canonizer(a).run(); }

/// Witness pi with conjugate(a, pi) == b, or nullopt when a and b are not p-equivalent.
inline std::optional<Permutation> p_equivalence_witness(const BinMatrix& a, const BinMatrix& b) {
  if (a.order() != b.order()) return std::nullopt;
  const auto ca = canonical_form(a);
  const auto cb = canonical_form(b);
  if (ca.canonical_matrix != cb.canonical_matrix) return std::nullopt;
  Permutation w = cb.witness.inverse().after(ca.witness);
  if (conjugate(a, w) != b) throw Error("p_equivalent: witness failed verification");
  return w;
}

inline bool p_equivalent(const BinMatrix& a, const BinMatrix& b) { return p_equivalence_witness(a, b).has_value(); }

}  // namespace thetalab
