#include <gtest/gtest.h>

#include "support.hpp"
#include "thetalab/testing/oracles.hpp"
#include "thetalab/testing/random_matrices.hpp"

namespace thetalab {
namespace {

using test::named;

BinMatrix fano_incidence() {
  // line i = {i, i+1, i+3} mod 7
  BinMatrix a(7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t d : {0, 1, 3}) a.set(i, (i + d) % 7);
  return a;
}

TEST(Graph, RejectsLoopsAndAsymmetry) {
  EXPECT_THROW(Graph(BinMatrix{{1, 0}, {0, 0}}), PreconditionError);
  EXPECT_THROW(Graph(BinMatrix{{0, 1}, {0, 0}}), PreconditionError);
}

TEST(Configuration, RequiresRegularJ2FreeIncidence) {
  EXPECT_THROW(Configuration(BinMatrix{{1, 1}, {0, 0}}), NonConstantSums);
  EXPECT_THROW(Configuration(BinMatrix{{1, 1}, {1, 1}}), DigonError);
  EXPECT_EQ(Configuration(fano_incidence()).kappa(), 3);
}

TEST(ConfigurationGraph, DesarguesGivesPetersen) {
  const auto p = named("petersen_hs");
  EXPECT_EQ(configuration_graph(Configuration(p)).adjacency(), p);
}

TEST(ConfigurationGraph, TerwilligerT2) {
  const auto a2 = named("a2_t2");
  EXPECT_EQ(configuration_graph(Configuration(a2)).adjacency().to_int(), theta(a2));
}

TEST(ConfigurationGraph, ProjectivePlaneHasNoEdges) {
  const auto g = configuration_graph(Configuration(fano_incidence()));
  EXPECT_EQ(g.adjacency(), BinMatrix(7));
}

TEST(ConfigurationGraph, DeficiencyRegular) {
  for (const char* name : {"petersen_hs", "a2_t2", "a1_t1", "s_1971", "c5_hs"}) {
    const Configuration c(named(name));
    const auto g = configuration_graph(c);
    const auto d = delta(static_cast<std::int64_t>(c.order()), c.kappa());
    for (auto deg : g.degrees()) EXPECT_EQ(static_cast<std::int64_t>(deg), d) << name;
  }
}

TEST(NeighbourhoodGeometry, PetersenAndT2AreConfigurations) {
  for (const char* name : {"petersen_hs", "a2_t2"}) {
    const auto c = neighbourhood_geometry(Graph(named(name)));
    EXPECT_EQ(c.order(), 10U);
    EXPECT_EQ(c.kappa(), 3);
    EXPECT_TRUE(has_polarity_form(c));
  }
}

TEST(NeighbourhoodGeometry, FourCycleIsADigon) {
  EXPECT_THROW(neighbourhood_geometry(Graph(test::k23())), DigonError);
  EXPECT_THROW(neighbourhood_geometry(Graph(test::cycle(4))), DigonError);
}

TEST(NeighbourhoodGeometry, RoundTripIsTheta) {
  for (const auto& g : regular_c4_free_graphs(10, 3)) {
    const auto back = configuration_graph(neighbourhood_geometry(Graph(g))).adjacency();
    EXPECT_EQ(back.to_int(), theta(g));
    EXPECT_EQ(back == g, is_solution(g, 1));
  }
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_n_admissible(Graph(test::cycle(5))));
  EXPECT_FALSE(is_n_admissible(Graph(test::k23())));
  EXPECT_TRUE(is_n_admissible(Graph(named("a2_t2"))));
}

TEST(Distances, PetersenGirthAndDiameter) {
  const Graph g(named("petersen_hs"));
  EXPECT_EQ(girth(g), 5);
  EXPECT_EQ(diameter(g), 2);
}

TEST(Distances, FiveCycleEveryVertexIsACentre) {
  const Graph g(test::cycle(5));
  for (std::size_t v = 0; v < 5; ++v) EXPECT_TRUE(is_centre_radius2(g, v));
  EXPECT_FALSE(is_centre_radius2(Graph(test::cycle(6)), 0));
}

TEST(Distances, T2VertexCIsACentre) {
  const auto t2 = corpus("a2_t2");
  const Graph g(t2.matrix);
  ASSERT_EQ(t2.labels[0], "c");
  EXPECT_TRUE(is_centre_radius2(g, 0));
  EXPECT_EQ(girth(g), 3);
}

TEST(Distances, InfiniteSentinels) {
  EXPECT_EQ(girth(Graph(test::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}))), kInfinite);
  EXPECT_EQ(diameter(Graph(BinMatrix(3))), kInfinite);
  EXPECT_EQ(girth(Graph(BinMatrix(1))), kInfinite);
  EXPECT_EQ(diameter(Graph(BinMatrix(1))), 0);
}

TEST(Distances, GirthOfCycles) {
  for (std::size_t n = 3; n <= 20; ++n) EXPECT_EQ(girth(Graph(test::cycle(n))), static_cast<int>(n));
  EXPECT_EQ(girth(Graph(test::k23())), 4);
  EXPECT_EQ(girth(Graph(test::complete(4))), 3);
}

TEST(Distances, DiameterTwoIffGirthFive) {
  for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 2}, {10, 3}})
    for (const auto& a : regular_c4_free_graphs(n, k)) {
      const Graph g(a);
      EXPECT_EQ(diameter(g) == 2, girth(g) == 5);
    }
}

TEST(Triangles, Petersen) { EXPECT_EQ(triangle_census(Graph(named("petersen_hs"))).total, 0U); }

TEST(Triangles, T2OnlyCIsTriangleFree) {
  const auto t = triangle_census(Graph(named("a2_t2")));
  EXPECT_EQ(t.total, 3U);
  for (std::size_t v = 0; v < 10; ++v) EXPECT_EQ(t.per_vertex[v] == 0, v == 0) << v;
}

TEST(Triangles, T1HasTheTwoOuterTriangles) {
  const auto t1 = corpus("a1_t1");
  const Graph g(t1.matrix);
  EXPECT_EQ(triangle_census(g).total, 2U);
  const auto at = [&](const std::string& l) {
    return static_cast<std::size_t>(std::find(t1.labels.begin(), t1.labels.end(), l) - t1.labels.begin());
  };
  const auto triangle = [&](const char* a, const char* b, const char* c) {
    return g.adjacent(at(a), at(b)) && g.adjacent(at(b), at(c)) && g.adjacent(at(a), at(c));
  };
  EXPECT_TRUE(triangle("c11", "c21", "c31"));
  EXPECT_TRUE(triangle("c12", "c22", "c32"));
}

TEST(Triangles, AgreesWithTraceOracle) {
  testing::Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::uniform(rng, 1, 14);
    auto a = testing::random_binary(n, 0.4, rng);
    BinMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j)) s.set(i, j), s.set(j, i);
    EXPECT_EQ(static_cast<std::int64_t>(triangle_census(Graph(s)).total), testing::triangles_by_trace(s));
  }
}

TEST(Triangles, TriangleFreeVertexIffCentreOnCorpus) {
  for (const char* name : {"c5_hs", "petersen_hs", "a1_t1", "a2_t2", "s_1971"}) {
    const Graph g(named(name));
    const auto t = triangle_census(g);
    for (std::size_t v = 0; v < g.order(); ++v) EXPECT_EQ(t.per_vertex[v] == 0, is_centre_radius2(g, v)) << name;
  }
}

TEST(Terwilliger, Examples) {
  EXPECT_TRUE(is_terwilliger(Graph(named("a2_t2")), 1));
  EXPECT_TRUE(is_terwilliger(Graph(named("a1_t1")), 1));
  EXPECT_TRUE(is_terwilliger(Graph(named("petersen_hs")), 1));
  for (std::size_t mu = 0; mu < 4; ++mu) EXPECT_FALSE(is_terwilliger(Graph(test::complete(4)), mu));
  EXPECT_FALSE(is_terwilliger(Graph(test::k23()), 1));
  EXPECT_FALSE(is_terwilliger(Graph(test::k23()), 2));  // vertices 0 and 1 share three neighbours
}

TEST(Terwilliger, ImpliesAdmissibleOnRandomGraphs) {
  testing::Rng rng(22);
  std::size_t terwilliger = 0;
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = testing::uniform(rng, 4, 10);
    std::size_t k = testing::uniform(rng, 2, std::min<std::size_t>(4, n - 1));
    if (n * k % 2) --k;
    const auto a = testing::random_regular_graph(n, k, 3 * n, rng);
    const Graph g(a);
    if (!is_terwilliger(g, 1)) continue;
    ++terwilliger;
    EXPECT_TRUE(is_n_admissible(g));
  }
  for (const char* name : {"c5_hs", "petersen_hs", "a1_t1", "a2_t2", "s_1971"}) {
    const Graph g(named(name));
    if (is_terwilliger(g, 1)) {
      EXPECT_TRUE(is_n_admissible(g)) << name;
    }
  }
  RecordProperty("terwilliger_samples", static_cast<int>(terwilliger));
}

TEST(Polarity, Examples) {
  EXPECT_TRUE(has_polarity_form(Configuration(named("a2_t2"))));
  EXPECT_TRUE(has_polarity_form(Configuration(named("petersen_hs"))));
  EXPECT_FALSE(has_polarity_form(Configuration(fano_incidence())));  // 0 lies on line 0
}

}  // namespace
}  // namespace thetalab
