#pragma once

// Permutations of {0,...,n-1} and their action on square matrices.
//
// Convention: conjugating A by pi moves entry (i, j) to (pi(i), pi(j)), i.e.
//   conjugate(A, pi)[i][j] = A[pi^-1(i)][pi^-1(j)].
// This is S^-1 A S with S the permutation matrix whose entry (i, pi(i)) is 1.
// Composition follows function composition: conjugate(conjugate(A, s), t) =
// conjugate(A, t.after(s)).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"

namespace thetalab {

class Permutation {
 public:
  Permutation() = default;

  /// Throws PreconditionError unless image is a bijection on {0,...,n-1}.
  explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto v : image_) {
      if (v >= image_.size() || seen[v]) throw PreconditionError("Permutation: image is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    return Permutation(std::move(img));
  }

  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
    auto p = identity(n);
    std::swap(p.image_[a], p.image_[b]);
    return p;
  }

  template <class Rng>
  static Permutation random(std::size_t n, Rng& rng) {
    auto p = identity(n);
    std::shuffle(p.image_.begin(), p.image_.end(), rng);
    return p;
  }

  [[nodiscard]] std::size_t order() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return image_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& image() const noexcept { return image_; }

  [[nodiscard]] Permutation inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// The composite i -> (*this)(first(i)).
  [[nodiscard]] Permutation after(const Permutation& first) const {
    if (first.order() != order()) throw OrderMismatch("Permutation::after: orders differ");
    std::vector<std::size_t> img(order());
    for (std::size_t i = 0; i < order(); ++i) img[i] = image_[first(i)];
    return Permutation(std::move(img));
  }

  [[nodiscard]] bool is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  /// Cycle notation on one line, fixed points omitted: "(0 3 2)(1 4)", or "()" for the identity.
  [[nodiscard]] std::string cycles() const {
    std::string out;
    std::vector<bool> done(order(), false);
    for (std::size_t s = 0; s < order(); ++s) {
      if (done[s] || image_[s] == s) continue;
      out += '(';
      for (std::size_t i = s; !done[i]; i = image_[i]) {
        if (i != s) out += ' ';
        out += std::to_string(i);
        done[i] = true;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

inline IntMatrix conjugate(const IntMatrix& a, const Permutation& pi) {
  if (a.order() != pi.order())
    throw OrderMismatch("conjugate: matrix order " + std::to_string(a.order()) + " vs permutation order " +
                        std::to_string(pi.order()));
  IntMatrix r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) r(pi(i), pi(j)) = a(i, j);
  return r;
}

inline BinMatrix conjugate(const BinMatrix& a, const Permutation& pi) {
  if (a.order() != pi.order())
    throw OrderMismatch("conjugate: matrix order " + std::to_string(a.order()) + " vs permutation order " +
                        std::to_string(pi.order()));
  const std::size_t n = a.order();
  std::vector<BinMatrix::Row> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    BinMatrix::Row out = 0;
    for (auto r = a.row(i); r; r &= r - 1) out |= BinMatrix::Row{1} << pi(static_cast<std::size_t>(std::countr_zero(r)));
    rows[pi(i)] = out;
  }
  return BinMatrix::from_rows(n, rows);
}

}  // namespace thetalab
