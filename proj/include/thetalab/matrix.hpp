#pragma once

// Dense square matrices over the integers and over {0,1}, the Theta operator
// Theta(A) = (k-1) I + J - A A^T and the class predicates built around it.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thetalab/error.hpp"

namespace thetalab {

class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t n, value_type fill = 0) : n_(n), data_(n * n, fill) {}

  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw OrderMismatch("IntMatrix: rows must all have length " + std::to_string(n_));
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix all_ones(std::size_t n) { return IntMatrix(n, 1); }

  [[nodiscard]] std::size_t order() const noexcept { return n_; }

  value_type& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  value_type operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  [[nodiscard]] std::span<const value_type> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }

  [[nodiscard]] IntMatrix transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    check_orders(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    check_orders(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend IntMatrix operator*(value_type s, IntMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    check_orders(a, b);
    const std::size_t n = a.n_;
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const value_type aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  static void check_orders(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_)
      throw OrderMismatch("matrix orders differ: " + std::to_string(a.n_) + " vs " + std::to_string(b.n_));
  }

  std::size_t n_ = 0;
  std::vector<value_type> data_;
};

/// Square (0,1)-matrix of order at most 64; row i is stored as a bit set
/// whose bit j is the entry (i, j).
class BinMatrix {
 public:
  using Row = std::uint64_t;
  static constexpr std::size_t kMaxOrder = 64;

  BinMatrix() = default;

  explicit BinMatrix(std::size_t n) : n_(n), rows_(n, 0) {
    if (n > kMaxOrder) throw PreconditionError("BinMatrix: order " + std::to_string(n) + " exceeds 64");
  }

  BinMatrix(std::initializer_list<std::initializer_list<int>> rows) : BinMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != n_) throw OrderMismatch("BinMatrix: rows must all have length " + std::to_string(n_));
      std::size_t j = 0;
      for (int v : r) {
        if (v != 0 && v != 1) throw NotBinary("BinMatrix: entry outside {0,1}");
        if (v) set(i, j);
        ++j;
      }
      ++i;
    }
  }

  /// Fails with NotBinary if any entry is outside {0,1}.
  explicit BinMatrix(const IntMatrix& m) : BinMatrix(m.order()) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const auto v = m(i, j);
        if (v != 0 && v != 1)
          throw NotBinary("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(v) +
                          " is not 0 or 1");
        if (v) set(i, j);
      }
  }

  static BinMatrix from_rows(std::size_t n, std::span<const Row> rows) {
    BinMatrix m(n);
    const Row mask = n == 64 ? ~Row{0} : ((Row{1} << n) - 1);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i] = rows[i] & mask;
    return m;
  }

  [[nodiscard]] std::size_t order() const noexcept { return n_; }

  bool operator()(std::size_t i, std::size_t j) const noexcept { return (rows_[i] >> j) & 1U; }

  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    if (value)
      rows_[i] |= Row{1} << j;
    else
      rows_[i] &= ~(Row{1} << j);
  }

  [[nodiscard]] Row row(std::size_t i) const noexcept { return rows_[i]; }
  void set_row(std::size_t i, Row r) noexcept { rows_[i] = r; }
  [[nodiscard]] std::span<const Row> rows() const noexcept { return rows_; }

  [[nodiscard]] std::size_t row_sum(std::size_t i) const noexcept {
    return static_cast<std::size_t>(std::popcount(rows_[i]));
  }

  [[nodiscard]] std::size_t ones() const noexcept {
    std::size_t c = 0;
    for (Row r : rows_) c += static_cast<std::size_t>(std::popcount(r));
    return c;
  }

  [[nodiscard]] BinMatrix transpose() const {
    BinMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (Row r = rows_[i]; r; r &= r - 1) t.set(static_cast<std::size_t>(std::countr_zero(r)), i);
    return t;
  }

  [[nodiscard]] IntMatrix to_int() const {
    IntMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j) ? 1 : 0;
    return m;
  }

  /// Row-major string of '0'/'1' characters.
  [[nodiscard]] std::string bit_string() const {
    std::string s;
    s.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) s.push_back((*this)(i, j) ? '1' : '0');
    return s;
  }

  friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Row> rows_;
};

/// Three-way comparison of the row-major bit strings; smaller orders sort first.
inline int compare_lex(const BinMatrix& a, const BinMatrix& b) noexcept {
  if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
  for (std::size_t i = 0; i < a.order(); ++i) {
    const auto diff = a.row(i) ^ b.row(i);
    if (diff == 0) continue;
    const int j = std::countr_zero(diff);
    return ((a.row(i) >> j) & 1U) ? 1 : -1;
  }
  return 0;
}

struct LexLess {
  bool operator()(const BinMatrix& a, const BinMatrix& b) const noexcept { return compare_lex(a, b) < 0; }
};

struct RowColSums {
  std::vector<IntMatrix::value_type> rows;
  std::vector<IntMatrix::value_type> cols;
  std::optional<IntMatrix::value_type> kappa;  ///< set only when all 2n sums coincide
};

inline RowColSums row_col_sums(const IntMatrix& a) {
  const std::size_t n = a.order();
  RowColSums s{std::vector<IntMatrix::value_type>(n, 0), std::vector<IntMatrix::value_type>(n, 0), std::nullopt};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.rows[i] += a(i, j);
      s.cols[j] += a(i, j);
    }
  if (n > 0) {
    const auto k = s.rows[0];
    const auto same = [k](auto v) { return v == k; };
    if (std::all_of(s.rows.begin(), s.rows.end(), same) && std::all_of(s.cols.begin(), s.cols.end(), same))
      s.kappa = k;
  }
  return s;
}

inline RowColSums row_col_sums(const BinMatrix& a) { return row_col_sums(a.to_int()); }

/// Constant row/column sum of a (0,1)-matrix, if there is one.
inline std::optional<std::int64_t> regular_degree(const BinMatrix& a) {
  const std::size_t n = a.order();
  if (n == 0) return std::nullopt;
  std::vector<int> cols(n, 0);
  const auto k = a.row_sum(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.row_sum(i) != k) return std::nullopt;
    for (auto r = a.row(i); r; r &= r - 1) ++cols[static_cast<std::size_t>(std::countr_zero(r))];
  }
  for (int c : cols)
    if (static_cast<std::size_t>(c) != k) return std::nullopt;
  return static_cast<std::int64_t>(k);
}

/// True iff no two distinct rows share two or more columns holding a 1.
inline bool is_j2_free(const BinMatrix& a) noexcept {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t l = i + 1; l < a.order(); ++l)
      if (std::popcount(a.row(i) & a.row(l)) >= 2) return false;
  return true;
}

inline bool is_binary(const IntMatrix& a) noexcept {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (a(i, j) != 0 && a(i, j) != 1) return false;
  return true;
}

inline bool is_symmetric(const IntMatrix& a) noexcept {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

inline bool is_symmetric(const BinMatrix& a) noexcept {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

inline bool has_zero_diagonal(const IntMatrix& a) noexcept {
  for (std::size_t i = 0; i < a.order(); ++i)
    if (a(i, i) != 0) return false;
  return true;
}

inline bool has_zero_diagonal(const BinMatrix& a) noexcept {
  for (std::size_t i = 0; i < a.order(); ++i)
    if (a(i, i)) return false;
  return true;
}

/// Deficiency n - k^2 + k - 1.
constexpr std::int64_t delta(std::int64_t n, std::int64_t kappa) noexcept { return n - kappa * kappa + kappa - 1; }

/// Theta(A) = (k-1) I + J - A A^T for A with all row and column sums equal to k.
/// Throws NonConstantSums otherwise. The empty matrix maps to itself.
inline IntMatrix theta(const IntMatrix& a) {
  if (a.order() == 0) return a;
  const auto sums = row_col_sums(a);
  if (!sums.kappa) throw NonConstantSums("theta: row and column sums are not all equal");
  const auto kappa = *sums.kappa;
  const std::size_t n = a.order();
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      IntMatrix::value_type dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += a(i, k) * a(j, k);
      const auto v = (i == j ? kappa - 1 : 0) + 1 - dot;
      r(i, j) = v;
      r(j, i) = v;
    }
  return r;
}

inline IntMatrix theta(const BinMatrix& a) { return theta(a.to_int()); }

/// m-fold composition of theta; m = 0 returns the input.
inline IntMatrix theta_iterate(IntMatrix a, unsigned m) {
  for (unsigned s = 0; s < m; ++s) a = theta(a);
  return a;
}

inline IntMatrix theta_iterate(const BinMatrix& a, unsigned m) { return theta_iterate(a.to_int(), m); }

/// Theta of a matrix already known to lie in D_{n,k}. Returns nullopt exactly
/// when the image leaves the (0,1)-matrices, which happens iff A has a J2.
inline std::optional<BinMatrix> theta_in_class(const BinMatrix& a) {
  const std::size_t n = a.order();
  std::vector<BinMatrix::Row> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int common = std::popcount(a.row(i) & a.row(j));
      if (common >= 2) return std::nullopt;
      if (common == 0) {
        rows[i] |= BinMatrix::Row{1} << j;
        rows[j] |= BinMatrix::Row{1} << i;
      }
    }
  return BinMatrix::from_rows(n, rows);
}

/// Results of the class predicates for one matrix.
struct ClassMembership {
  std::optional<std::int64_t> kappa;  ///< common row/column sum when it exists
  bool is_Z_kappa = false;
  bool is_D_kappa = false;
  bool is_symmetric = false;
  bool zero_diagonal = false;
  bool j2_free = false;  ///< no 2x2 submatrix whose four entries all equal 1

  /// Conditions (L), (S) and (Z) hold together.
  [[nodiscard]] bool lsz() const noexcept { return j2_free && is_symmetric && zero_diagonal; }
};

inline ClassMembership classify_membership(const IntMatrix& a) {
  ClassMembership c;
  const auto sums = row_col_sums(a);
  c.kappa = sums.kappa;
  c.is_Z_kappa = sums.kappa.has_value();
  c.is_D_kappa = c.is_Z_kappa && is_binary(a);
  c.is_symmetric = is_symmetric(a);
  c.zero_diagonal = has_zero_diagonal(a);

  const std::size_t n = a.order();
  if (n > BinMatrix::kMaxOrder) throw PreconditionError("classify_membership: order exceeds 64");
  BinMatrix ones(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) == 1) ones.set(i, j);
  c.j2_free = is_j2_free(ones);
  return c;
}

inline ClassMembership classify_membership(const BinMatrix& a) { return classify_membership(a.to_int()); }

}  // namespace thetalab
