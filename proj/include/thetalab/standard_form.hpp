#pragma once

// Standard forms of adjacency matrices anchored at a centre of radius 2.
//
// Vertex order of an assembled form of order k^2+1:
//   0                        the centre v0
//   1 .. k                   its neighbours v_1 .. v_k
//   k+1+(i-1)(k-1)+(j-1)     v_{i,j}, the neighbours of v_i other than v0
//
//          [ 0    1_k   0  ]
//   S(P) = [ 1_k^T 0    K  ]     K = I_k (x) 1_{k-1}
//          [ 0    K^T   P  ]
//
// P is read as a k x k grid of (k-1) x (k-1) blocks P_{ij}.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"
#include "thetalab/permutation.hpp"

namespace thetalab {

struct StandardForm {
  int kappa = 0;
  BinMatrix p;          ///< order k^2 - k
  BinMatrix assembled;  ///< order k^2 + 1
};

/// A standard form together with the relabelling that produced it:
/// conjugate(input, witness) == form.assembled.
struct LabelledForm {
  StandardForm form;
  Permutation witness;
};

/// Block (i, j) of P, zero-based.
inline BinMatrix block(const BinMatrix& p, int kappa, std::size_t i, std::size_t j) {
  const auto b = static_cast<std::size_t>(kappa - 1);
  BinMatrix out(b);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) out.set(r, c, p(i * b + r, j * b + c));
  return out;
}

/// At most one 1 in every row and every column.
inline bool is_partial_permutation(const BinMatrix& m) noexcept {
  for (std::size_t i = 0; i < m.order(); ++i)
    if (m.row_sum(i) > 1) return false;
  const auto t = m.transpose();
  for (std::size_t i = 0; i < t.order(); ++i)
    if (t.row_sum(i) > 1) return false;
  return true;
}

inline bool is_permutation_matrix(const BinMatrix& m) noexcept {
  for (std::size_t i = 0; i < m.order(); ++i)
    if (m.row_sum(i) != 1) return false;
  return is_partial_permutation(m);
}

inline bool is_zero(const BinMatrix& m) noexcept { return m.ones() == 0; }

inline bool is_identity(const BinMatrix& m) noexcept {
  for (std::size_t i = 0; i < m.order(); ++i)
    if (m.row(i) != (BinMatrix::Row{1} << i)) return false;
  return true;
}

/// k with k^2 + 1 == n and k >= 2, if any.
inline std::optional<int> kappa_for_order(std::size_t n) {
  for (int k = 2; static_cast<std::size_t>(k * k + 1) <= n; ++k)
    if (static_cast<std::size_t>(k * k + 1) == n) return k;
  return std::nullopt;
}

inline StandardForm assemble(const BinMatrix& p, int kappa) {
  if (kappa < 2) throw BadP("assemble: kappa must be at least 2");
  const auto k = static_cast<std::size_t>(kappa);
  if (p.order() != k * k - k)
    throw BadP("assemble: P has order " + std::to_string(p.order()) + ", expected " + std::to_string(k * k - k));
  if (!is_symmetric(p)) throw BadP("assemble: P is not symmetric");
  if (!has_zero_diagonal(p)) throw BadP("assemble: P has a nonzero diagonal entry");
  for (std::size_t i = 0; i < p.order(); ++i)
    if (p.row_sum(i) != k - 1) throw BadP("assemble: row " + std::to_string(i) + " of P does not sum to kappa-1");

  const std::size_t n = k * k + 1;
  BinMatrix s(n);
  for (std::size_t i = 1; i <= k; ++i) {
    s.set(0, i);
    s.set(i, 0);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const std::size_t v = k + 1 + (i - 1) * (k - 1) + j;
      s.set(i, v);
      s.set(v, i);
    }
  }
  for (std::size_t r = 0; r < p.order(); ++r) s.set_row(k + 1 + r, s.row(k + 1 + r) | (p.row(r) << (k + 1)));
  return {kappa, p, s};
}

/// Bottom-right block P of a matrix laid out as a standard form of order k^2+1.
inline BinMatrix extract_p(const BinMatrix& a, int kappa) {
  const auto k = static_cast<std::size_t>(kappa);
  const std::size_t m = k * k - k;
  BinMatrix p(m);
  for (std::size_t r = 0; r < m; ++r) p.set_row(r, a.row(k + 1 + r) >> (k + 1));
  return p;
}

/// True iff a has exactly the layout of some S(P); returns k.
inline std::optional<int> standard_form_kappa(const BinMatrix& a) {
  const auto kappa = kappa_for_order(a.order());
  if (!kappa) return std::nullopt;
  const auto p = extract_p(a, *kappa);
  const auto k = static_cast<std::size_t>(*kappa);
  if (!is_symmetric(p) || !has_zero_diagonal(p)) return std::nullopt;
  for (std::size_t r = 0; r < p.order(); ++r)
    if (p.row_sum(r) != k - 1) return std::nullopt;
  try {
    if (assemble(p, *kappa).assembled != a) return std::nullopt;
  } catch (const BadP&) {
    return std::nullopt;
  }
  return kappa;
}

/// Block pattern of a Hoffman-Singleton form: standard layout, every diagonal
/// block of P zero, and the first block row and column of P identities.
inline bool is_hs_form(const BinMatrix& a) {
  const auto kappa = standard_form_kappa(a);
  if (!kappa) return false;
  const auto p = extract_p(a, *kappa);
  const auto k = static_cast<std::size_t>(*kappa);
  for (std::size_t i = 0; i < k; ++i)
    if (!is_zero(block(p, *kappa, i, i))) return false;
  for (std::size_t i = 1; i < k; ++i)
    if (!is_identity(block(p, *kappa, 0, i)) || !is_identity(block(p, *kappa, i, 0))) return false;
  return true;
}

namespace detail {

// Neighbour families around a candidate centre, or nullopt when the vertex
// cannot anchor a standard form (it lies in a triangle, or second
// neighbourhoods overlap or miss vertices).
struct Families {
  std::vector<std::size_t> first;                ///< v_1 .. v_k
  std::vector<std::vector<std::size_t>> second;  ///< second[i] = neighbours of first[i] other than the centre
};

inline std::optional<Families> families_at(const BinMatrix& a, std::size_t centre, std::size_t k) {
  const auto bit = [](std::size_t v) { return BinMatrix::Row{1} << v; };
  const auto n0 = a.row(centre);
  if (static_cast<std::size_t>(std::popcount(n0)) != k) return std::nullopt;
  Families f;
  BinMatrix::Row covered = n0 | bit(centre);
  for (auto r = n0; r; r &= r - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(r));
    const auto rest = a.row(v) & ~bit(centre);
    if (static_cast<std::size_t>(std::popcount(rest)) != k - 1 || (rest & covered)) return std::nullopt;
    covered |= rest;
    f.first.push_back(v);
    std::vector<std::size_t> fam;
    for (auto s = rest; s; s &= s - 1) fam.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    f.second.push_back(std::move(fam));
  }
  if (static_cast<std::size_t>(std::popcount(covered)) != a.order()) return std::nullopt;
  return f;
}

// Visits every standard-form labelling anchored at centre: all orders of the
// families and all orders inside each family. The callback receives the
// relabelling (old vertex -> new position).
inline void for_each_labelling(const Families& f, std::size_t centre, std::size_t n,
                               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t k = f.first.size();
  std::vector<std::size_t> family_order(k);
  std::iota(family_order.begin(), family_order.end(), std::size_t{0});
  std::vector<std::size_t> label(n);
  label[centre] = 0;

  std::vector<std::vector<std::size_t>> inner(k);
  std::function<void(std::size_t)> place = [&](std::size_t slot) {
    if (slot == k) {
      visit(label);
      return;
    }
    auto& members = inner[slot];
    members = f.second[family_order[slot]];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t j = 0; j < members.size(); ++j) label[members[j]] = k + 1 + slot * (k - 1) + j;
      place(slot + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  do {
    for (std::size_t s = 0; s < k; ++s) label[f.first[family_order[s]]] = 1 + s;
    place(0);
  } while (std::next_permutation(family_order.begin(), family_order.end()));
}

constexpr int kMaxLabellingKappa = 4;

inline std::size_t require_solution_shape(const BinMatrix& a, const char* who) {
  const auto kappa = kappa_for_order(a.order());
  if (!kappa) throw PreconditionError(std::string(who) + ": order is not k^2+1 for any k >= 2");
  if (*kappa > kMaxLabellingKappa)
    throw PreconditionError(std::string(who) + ": labelling search is limited to kappa <= 4");
  if (!is_symmetric(a) || !has_zero_diagonal(a))
    throw PreconditionError(std::string(who) + ": not an adjacency matrix");
  const auto deg = regular_degree(a);
  if (!deg || *deg != *kappa) throw PreconditionError(std::string(who) + ": graph is not kappa-regular");
  if (!is_j2_free(a)) throw PreconditionError(std::string(who) + ": graph contains a 4-cycle");
  return static_cast<std::size_t>(*kappa);
}

inline LabelledForm to_labelled_form(const BinMatrix& m, Permutation w) {
  const auto kappa = *kappa_for_order(m.order());
  return {StandardForm{kappa, extract_p(m, kappa), m}, std::move(w)};
}

}  // namespace detail

/// Relabels an adjacency matrix of a k-regular C4-free graph on k^2+1
/// vertices (k <= 4) into standard form. Every centre of radius 2 outside all
/// triangles and every family ordering is tried, and the assembled matrix with
/// the smallest row-major bit string is returned, so the result depends only
/// on the isomorphism class of the graph. Throws NoCentre if no vertex
/// qualifies.
inline LabelledForm decompose(const BinMatrix& a) {
  const std::size_t k = detail::require_solution_shape(a, "decompose");
  std::optional<BinMatrix> best;
  std::optional<Permutation> best_w;
  for (std::size_t centre = 0; centre < a.order(); ++centre) {
    const auto fam = detail::families_at(a, centre, k);
    if (!fam) continue;
    detail::for_each_labelling(*fam, centre, a.order(), [&](const std::vector<std::size_t>& label) {
      Permutation w(label);
      auto m = conjugate(a, w);
      if (!best || compare_lex(m, *best) < 0) {
        best = std::move(m);
        best_w = std::move(w);
      }
    });
  }
  if (!best) throw NoCentre("decompose: every vertex lies in a triangle or misses a vertex at distance <= 2");
  return detail::to_labelled_form(*best, *best_w);
}

/// Normalises a standard form to an HS-form about the same centre. A form
/// that already passes is_hs_form is returned unchanged with the identity
/// witness; otherwise the lexicographically smallest HS-form reachable by
/// reordering families is returned. Throws NotHS when none exists, in
/// particular when every diagonal block of P is nonzero.
inline LabelledForm to_hs_form(const StandardForm& s) {
  if (is_hs_form(s.assembled)) return {s, Permutation::identity(s.assembled.order())};
  const auto k = static_cast<std::size_t>(s.kappa);
  bool some_zero_diagonal = false;
  for (std::size_t i = 0; i < k; ++i) some_zero_diagonal |= is_zero(block(s.p, s.kappa, i, i));
  if (!some_zero_diagonal) throw NotHS("to_hs_form: every diagonal block of P is nonzero");

  detail::require_solution_shape(s.assembled, "to_hs_form");
  const auto fam = detail::families_at(s.assembled, 0, k);
  if (!fam) throw PreconditionError("to_hs_form: vertex 0 does not anchor a standard form");
  std::optional<BinMatrix> best;
  std::optional<Permutation> best_w;
  detail::for_each_labelling(*fam, 0, s.assembled.order(), [&](const std::vector<std::size_t>& label) {
    Permutation w(label);
    auto m = conjugate(s.assembled, w);
    if (!is_hs_form(m)) return;
    if (!best || compare_lex(m, *best) < 0) {
      best = std::move(m);
      best_w = std::move(w);
    }
  });
  if (!best) throw NotHS("to_hs_form: no relabelling about this centre yields an HS-form");
  return detail::to_labelled_form(*best, *best_w);
}

}  // namespace thetalab
