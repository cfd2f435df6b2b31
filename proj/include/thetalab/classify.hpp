#pragma once

// Exhaustive classification of the solutions of Theta^m(A) = A inside
// D_{k^2+1,k} for k <= 4, up to p-equivalence.
//
// A solution is the adjacency matrix of a k-regular graph without 4-cycles,
// and for k <= 4 it has a centre of radius 2, hence a p-equivalent standard
// form S(P). The search fills P row by row: symmetry is kept by mirroring
// every chosen edge, each row receives exactly k-1 ones, and every new edge
// must keep the whole graph free of 4-cycles (which also forces each block of
// P to be a partial permutation). Completed forms are tested for the fixed
// point and deduplicated by canonical form.
//
// Relabelling inside families 2..k is broken by requiring that the vertices
// of such a family adjacent to family 1 come first, ordered by their
// neighbour in family 1.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "thetalab/canonical.hpp"
#include "thetalab/corpus.hpp"
#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"
#include "thetalab/orbit.hpp"
#include "thetalab/standard_form.hpp"

namespace thetalab {

struct SolutionClass {
  BinMatrix representative;  ///< HS-form when one exists, else the canonical standard form
  BinMatrix canonical;       ///< canonical_form of the class, used for ordering
  int kappa = 0;
  unsigned m = 0;
  std::size_t fundamental_period = 0;
  bool hs_form = false;
  std::vector<std::string> names;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t completed_forms = 0;
  std::uint64_t labelled_solutions = 0;
};

struct Classification {
  std::vector<SolutionClass> classes;
  SearchStats stats;
};

/// Canonical forms ordered by their bit strings.
using CanonicalSet = std::set<BinMatrix, LexLess>;

namespace detail {

inline constexpr std::size_t kMaxSearchOrder = 17;

class StandardFormSearch {
 public:
  using Row = BinMatrix::Row;

  struct State {
    std::array<Row, kMaxSearchOrder> adj{};
    std::array<int, kMaxSearchOrder> pdeg{};
  };

  StandardFormSearch(int kappa, unsigned m)
      : k_(static_cast<std::size_t>(kappa)), n_(k_ * k_ + 1), pm_(k_ * k_ - k_), off_(k_ + 1), m_(m) {}

  [[nodiscard]] State initial_state() const {
    State s;
    const auto link = [&s](std::size_t a, std::size_t b) {
      s.adj[a] |= Row{1} << b;
      s.adj[b] |= Row{1} << a;
    };
    for (std::size_t i = 1; i <= k_; ++i) {
      link(0, i);
      for (std::size_t j = 0; j + 1 < k_; ++j) link(i, off_ + (i - 1) * (k_ - 1) + j);
    }
    return s;
  }

  // Partial states after the first `rows` rows of P are complete, in search order.
  [[nodiscard]] std::vector<State> frontier(std::size_t rows) const {
    std::vector<State> out;
    StandardFormSearch probe = *this;
    probe.split_row_ = rows;
    probe.collect_ = &out;
    State s = initial_state();
    probe.row(s, 0);
    return out;
  }

  // Completes a state; solutions are appended to `solutions`.
  void run(State s, std::size_t from_row, std::vector<BinMatrix>& solutions) {
    solutions_ = &solutions;
    row(s, from_row);
  }

  [[nodiscard]] const SearchStats& stats() const noexcept { return stats_; }

 private:
  [[nodiscard]] std::size_t family(std::size_t pcol) const noexcept { return pcol / (k_ - 1); }
  [[nodiscard]] std::size_t slot(std::size_t pcol) const noexcept { return pcol % (k_ - 1); }

  // Adding u-w creates a 4-cycle iff u already shares a neighbour with some
  // neighbour of w, or w with some neighbour of u.
  [[nodiscard]] static bool keeps_c4_free(const State& s, std::size_t u, std::size_t w) noexcept {
    for (Row r = s.adj[w]; r; r &= r - 1)
      if (s.adj[u] & s.adj[static_cast<std::size_t>(std::countr_zero(r))]) return false;
    for (Row r = s.adj[u]; r; r &= r - 1)
      if (s.adj[w] & s.adj[static_cast<std::size_t>(std::countr_zero(r))]) return false;
    return true;
  }

  // Rows of family 1 may only fill the next unmatched slot of families 2..k.
  [[nodiscard]] bool respects_slot_order(const State& s, std::size_t r, std::size_t c) const noexcept {
    if (family(r) != 0 || family(c) == 0) return true;
    Row family1 = 0;
    for (std::size_t j = 0; j + 1 < k_; ++j) family1 |= Row{1} << (off_ + j);
    std::size_t matched = 0;
    const std::size_t base = family(c) * (k_ - 1);
    for (std::size_t j = 0; j + 1 < k_; ++j)
      if (s.adj[off_ + base + j] & family1) ++matched;
    return slot(c) == matched;
  }

  void row(State& s, std::size_t r) {
    ++stats_.nodes;
    if (collect_ && r == split_row_) {
      collect_->push_back(s);
      return;
    }
    if (r == pm_) {
      leaf(s);
      return;
    }
    const int need = static_cast<int>(k_) - 1 - s.pdeg[r];
    choose(s, r, r + 1, need);
  }

  void choose(State& s, std::size_t r, std::size_t c0, int need) {
    if (need == 0) {
      row(s, r + 1);
      return;
    }
    const int cap = static_cast<int>(k_) - 1;
    for (std::size_t c = c0; c < pm_; ++c) {
      if (static_cast<int>(pm_ - c) < need) break;
      if (s.pdeg[c] >= cap) continue;
      const std::size_t u = off_ + r;
      const std::size_t w = off_ + c;
      if (!respects_slot_order(s, r, c) || !keeps_c4_free(s, u, w)) continue;
      s.adj[u] |= Row{1} << w;
      s.adj[w] |= Row{1} << u;
      ++s.pdeg[r];
      ++s.pdeg[c];
      choose(s, r, c + 1, need - 1);
      --s.pdeg[r];
      --s.pdeg[c];
      s.adj[u] &= ~(Row{1} << w);
      s.adj[w] &= ~(Row{1} << u);
    }
  }

  void leaf(const State& s) {
    ++stats_.completed_forms;
    const auto a = BinMatrix::from_rows(n_, std::span<const Row>(s.adj.data(), n_));
    if (is_solution(a, m_)) {
      ++stats_.labelled_solutions;
      solutions_->push_back(a);
    }
  }

  std::size_t k_;
  std::size_t n_;
  std::size_t pm_;
  std::size_t off_;
  unsigned m_;
  SearchStats stats_;
  std::vector<BinMatrix>* solutions_ = nullptr;
  std::vector<State>* collect_ = nullptr;
  std::size_t split_row_ = 0;
};

inline std::vector<std::pair<std::string, std::string>> named_classes() {
  return {{"c5_hs", "c5"}, {"petersen_hs", "petersen"}, {"a2_t2", "t2_10_3F"}, {"s_1971", "cfg_1971"}};
}

}  // namespace detail

/// Canonical forms of all labelled solutions found by the standard-form search.
inline CanonicalSet standard_form_solutions(int kappa, unsigned m, unsigned workers = 1, SearchStats* stats = nullptr) {
  if (kappa < 2 || kappa > 4) throw PreconditionError("classify: kappa must be 2, 3 or 4");
  if (m < 1 || m > 8) throw PreconditionError("classify: m must be between 1 and 8");
  workers = std::max(1U, workers);

  const detail::StandardFormSearch proto(kappa, m);
  const std::size_t split = kappa == 4 ? 2 : 1;
  const auto tasks = proto.frontier(split);

  std::vector<CanonicalSet> found(workers);
  std::vector<SearchStats> partial(workers);
  std::atomic<std::size_t> next{0};
  const auto work = [&](unsigned id) {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      detail::StandardFormSearch search(kappa, m);
      std::vector<BinMatrix> sols;
      search.run(tasks[t], split, sols);
      partial[id].nodes += search.stats().nodes;
      partial[id].completed_forms += search.stats().completed_forms;
      partial[id].labelled_solutions += search.stats().labelled_solutions;
      for (const auto& a : sols) found[id].insert(canonical_form(a).canonical_matrix);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }

  CanonicalSet all;
  SearchStats total;
  for (unsigned id = 0; id < workers; ++id) {
    all.insert(found[id].begin(), found[id].end());
    total.nodes += partial[id].nodes;
    total.completed_forms += partial[id].completed_forms;
    total.labelled_solutions += partial[id].labelled_solutions;
  }
  if (stats) *stats = total;
  return all;
}

/// Representative, period and names for one class given by its canonical form.
inline SolutionClass describe_class(const BinMatrix& canonical, int kappa, unsigned m) {
  SolutionClass c;
  c.canonical = canonical;
  c.kappa = kappa;
  c.m = m;
  c.fundamental_period = fundamental_period(canonical).value_or(0);
  const auto form = decompose(canonical);
  try {
    c.representative = to_hs_form(form.form).form.assembled;
    c.hs_form = true;
  } catch (const NotHS&) {
    c.representative = form.form.assembled;
  }
  for (const auto& [corpus_name, label] : detail::named_classes()) {
    const auto named = corpus(corpus_name);
    if (named.matrix.order() == canonical.order() && p_equivalent(named.matrix, canonical)) c.names.push_back(label);
  }
  return c;
}

/// All p-equivalence classes of solutions of Theta^m(A) = A in D_{k^2+1,k},
/// ordered by canonical bit string. The result does not depend on `workers`.
inline Classification classify_with_stats(int kappa, unsigned m, unsigned workers = 1) {
  Classification out;
  const auto canon = standard_form_solutions(kappa, m, workers, &out.stats);
  for (const auto& c : canon) out.classes.push_back(describe_class(c, kappa, m));
  return out;
}

inline std::vector<SolutionClass> classify(int kappa, unsigned m, unsigned workers = 1) {
  return classify_with_stats(kappa, m, workers).classes;
}

}  // namespace thetalab
