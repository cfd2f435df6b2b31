#include <gtest/gtest.h>

#include "support.hpp"
#include "thetalab/testing/oracles.hpp"
#include "thetalab/testing/random_matrices.hpp"

namespace thetalab {
namespace {

using test::named;

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), PreconditionError);
  EXPECT_THROW(Permutation({0, 2}), PreconditionError);
}

TEST(Permutation, CompositionAndInverse) {
  const Permutation s({1, 2, 0});
  const Permutation t({0, 2, 1});
  const auto ts = t.after(s);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(ts(i), t(s(i)));
  EXPECT_TRUE(s.after(s.inverse()).is_identity());
  EXPECT_TRUE(s.inverse().after(s).is_identity());
}

TEST(Permutation, CycleNotation) {
  EXPECT_EQ(Permutation({3, 4, 0, 2, 1}).cycles(), "(0 3 2)(1 4)");
  EXPECT_EQ(Permutation::identity(4).cycles(), "()");
  EXPECT_EQ(Permutation::transposition(3, 0, 2).cycles(), "(0 2)");
}

TEST(Conjugate, IdentityLeavesMatrix) {
  const auto a = named("a2_t2");
  EXPECT_EQ(conjugate(a, Permutation::identity(10)), a);
}

TEST(Conjugate, TranspositionMovesTheEntry) {
  const IntMatrix a{{0, 1}, {0, 0}};
  EXPECT_EQ(conjugate(a, Permutation::transposition(2, 0, 1)), (IntMatrix{{0, 0}, {1, 0}}));
  EXPECT_EQ(conjugate(BinMatrix(a), Permutation::transposition(2, 0, 1)), (BinMatrix{{0, 0}, {1, 0}}));
}

TEST(Conjugate, Convention) {
  // result[pi(i)][pi(j)] = A[i][j]
  testing::Rng rng(1);
  const auto a = testing::random_binary(7, 0.4, rng);
  const auto pi = Permutation::random(7, rng);
  const auto b = conjugate(a, pi);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(b(pi(i), pi(j)), a(i, j));
}

TEST(Conjugate, ComposesAsAnAction) {
  testing::Rng rng(2);
  const auto a = testing::random_binary(8, 0.5, rng);
  const auto s = Permutation::random(8, rng);
  const auto t = Permutation::random(8, rng);
  EXPECT_EQ(conjugate(conjugate(a, s), t), conjugate(a, t.after(s)));
}

TEST(Conjugate, OrderMismatch) {
  EXPECT_THROW(conjugate(IntMatrix(3), Permutation::identity(2)), OrderMismatch);
  EXPECT_THROW(conjugate(BinMatrix(3), Permutation::identity(2)), OrderMismatch);
}

TEST(Conjugate, PreservesSolutions) {
  testing::Rng rng(3);
  const auto p = named("petersen_hs");
  const auto a2 = named("a2_t2");
  for (int t = 0; t < 20; ++t) {
    const auto pi = Permutation::random(10, rng);
    const auto q = conjugate(p, pi);
    EXPECT_EQ(theta(q), q.to_int());
    EXPECT_TRUE(is_solution(conjugate(a2, pi), 3));
  }
}

TEST(Canonical, WitnessVerifies) {
  testing::Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto a = testing::random_binary(testing::uniform(rng, 1, 14), 0.3, rng);
    const auto c = canonical_form(a);
    EXPECT_EQ(conjugate(a, c.witness), c.canonical_matrix);
  }
}

TEST(Canonical, ConstantOnConjugates) {
  testing::Rng rng(5);
  for (const auto& name : corpus_names()) {
    const auto a = named(name.c_str());
    const auto ref = canonical_form(a).canonical_matrix;
    for (int t = 0; t < 100; ++t)
      EXPECT_EQ(canonical_form(conjugate(a, Permutation::random(a.order(), rng))).canonical_matrix, ref) << name;
  }
}

TEST(Canonical, Idempotent) {
  testing::Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const auto a = testing::random_binary(testing::uniform(rng, 1, 12), 0.4, rng);
    const auto c = canonical_form(a).canonical_matrix;
    EXPECT_EQ(canonical_form(c).canonical_matrix, c);
  }
}

TEST(Canonical, HighlySymmetricInputs) {
  for (std::size_t n : {1, 5, 16, 17}) {
    EXPECT_EQ(canonical_form(BinMatrix(n)).canonical_matrix, BinMatrix(n));
    EXPECT_EQ(canonical_form(test::complete(n)).canonical_matrix, test::complete(n));
  }
  const auto c = canonical_form(test::cycle(17));
  EXPECT_EQ(conjugate(test::cycle(17), c.witness), c.canonical_matrix);
}

TEST(Canonical, FiveCycleInScrambledOrder) {
  const auto a = test::cycle(5);
  const auto b = test::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_form(a).canonical_matrix, canonical_form(b).canonical_matrix);
}

TEST(Canonical, TerwilligerGraphsDiffer) {
  const auto a1 = named("a1_t1");
  const auto a2 = named("a2_t2");
  // independent invariant: triangle counts 2 and 3
  EXPECT_EQ(testing::triangles_by_trace(a1), 2);
  EXPECT_EQ(testing::triangles_by_trace(a2), 3);
  EXPECT_NE(canonical_form(a1).canonical_matrix, canonical_form(a2).canonical_matrix);
  EXPECT_FALSE(p_equivalent(a1, a2));
}

TEST(PEquivalence, Reflexive) {
  const auto a = named("a2_t2");
  const auto w = p_equivalence_witness(a, a);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(conjugate(a, *w), a);
}

TEST(PEquivalence, ThetaOfT1IsPetersen) {
  EXPECT_TRUE(p_equivalent(BinMatrix(theta(named("a1_t1"))), named("petersen_hs")));
}

TEST(PEquivalence, DifferentOrders) { EXPECT_FALSE(p_equivalent(BinMatrix(3), BinMatrix(4))); }

TEST(PEquivalence, DirectedInputs) {
  // reversing a directed 3-cycle is a relabelling
  const BinMatrix fwd{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  EXPECT_TRUE(p_equivalent(fwd, fwd.transpose()));
  // path 0->1->2 versus 0->1<-2
  const BinMatrix path{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  const BinMatrix in{{0, 1, 0}, {0, 0, 0}, {0, 1, 0}};
  EXPECT_FALSE(p_equivalent(path, in));
}

TEST(PEquivalence, AgreesWithFactorialScan) {
  testing::Rng rng(8);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = testing::uniform(rng, 1, 7);
    const auto a = testing::random_binary(n, 0.4, rng);
    const auto b = t % 2 ? conjugate(a, Permutation::random(n, rng)) : testing::random_binary(n, 0.4, rng);
    EXPECT_EQ(p_equivalent(a, b), testing::brute_force_p_equivalence(a, b).has_value());
  }
}

TEST(PEquivalence, EquivalenceRelationOnRandomTriples) {
  testing::Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::uniform(rng, 2, 6);
    // sparse regular inputs so that equivalent triples occur often
    const std::size_t k = testing::uniform(rng, 1, n - 1);
    const auto a = testing::random_d_matrix(n, k, n, rng);
    const auto b = testing::random_d_matrix(n, k, n, rng);
    const auto c = testing::random_d_matrix(n, k, n, rng);
    EXPECT_EQ(p_equivalent(a, b), p_equivalent(b, a));
    if (p_equivalent(a, b) && p_equivalent(b, c)) {
      EXPECT_TRUE(p_equivalent(a, c));
    }
  }
}

}  // namespace
}  // namespace thetalab
