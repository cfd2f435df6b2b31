#pragma once

// Reproduction suite: every headline result as a named, timed check. Shared
// by `thetalab verify` and the acceptance test binary.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "thetalab/canonical.hpp"
#include "thetalab/census.hpp"
#include "thetalab/classify.hpp"
#include "thetalab/corpus.hpp"
#include "thetalab/diophantine.hpp"
#include "thetalab/geometry.hpp"
#include "thetalab/matrix.hpp"
#include "thetalab/matrix_io.hpp"
#include "thetalab/orbit.hpp"
#include "thetalab/permutation.hpp"
#include "thetalab/standard_form.hpp"
#include "thetalab/testing/oracles.hpp"
#include "thetalab/testing/random_matrices.hpp"

namespace thetalab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  ///< 0 means untimed
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  unsigned workers = 4;                        ///< used by the parallel half of the kappa = 4 check
  std::optional<std::string> corpus_dir;       ///< read <name>.mat files from here instead of the built-in texts
  std::function<void(const CheckResult&)> on_result;
};

/// Built-in corpus, or the files of a corpus directory.
class CorpusSource {
 public:
  explicit CorpusSource(std::optional<std::string> dir = std::nullopt) : dir_(std::move(dir)) {}

  [[nodiscard]] NamedMatrix get(const std::string& name) const {
    if (!dir_) return corpus(name);
    if (name == "s_1971") {
      auto s = corpus(name);
      s.matrix = assemble(get("p_1971").matrix, 4).assembled;
      return s;
    }
    const auto path = std::filesystem::path(*dir_) / (name + ".mat");
    auto f = read_mat_file(path.string());
    auto m = corpus(name);
    m.matrix = to_binary(f);
    m.labels = std::move(f.labels);
    return m;
  }

  [[nodiscard]] BinMatrix matrix(const std::string& name) const { return get(name).matrix; }

 private:
  std::optional<std::string> dir_;
};

namespace detail {

// Accumulates failed expectations of one check.
class Expect {
 public:
  void that(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  [[nodiscard]] bool ok() const noexcept { return failures_.empty(); }

  [[nodiscard]] std::string detail() const {
    std::ostringstream out;
    if (failures_.empty()) {
      out << count_ << " expectations hold";
    } else {
      out << failures_.size() << " of " << count_ << " expectations failed: ";
      for (std::size_t i = 0; i < failures_.size(); ++i) out << (i ? "; " : "") << failures_[i];
    }
    for (const auto& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

inline std::vector<std::size_t> periods(const std::vector<SolutionClass>& cs) {
  std::vector<std::size_t> p;
  for (const auto& c : cs) p.push_back(c.fundamental_period);
  return p;
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline bool same_classes(const std::vector<SolutionClass>& a, const std::vector<SolutionClass>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].canonical != b[i].canonical || a[i].representative != b[i].representative ||
        a[i].fundamental_period != b[i].fundamental_period || a[i].names != b[i].names)
      return false;
  return true;
}

// Every block of P is a partial permutation; a zero block P_ij forces every
// other block of block-row i and block-column j to be a permutation matrix.
inline bool block_constraints_hold(const BinMatrix& p, int kappa) {
  const auto k = static_cast<std::size_t>(kappa);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!is_partial_permutation(block(p, kappa, i, j))) return false;
      if (!is_zero(block(p, kappa, i, j))) continue;
      for (std::size_t t = 0; t < k; ++t) {
        if (t != j && !is_permutation_matrix(block(p, kappa, i, t))) return false;
        if (t != i && !is_permutation_matrix(block(p, kappa, t, j))) return false;
      }
    }
  return true;
}

inline bool is_configuration_10_3(const BinMatrix& adjacency) {
  try {
    const auto c = neighbourhood_geometry(Graph(adjacency));
    return c.incidence().order() == 10 && c.kappa() == 3 && has_polarity_form(c);
  } catch (const Error&) {
    return false;
  }
}

inline void fixed_points_m1(Expect& e, const CorpusSource& src) {
  const auto k2 = classify(2, 1);
  e.that(k2.size() == 1, "classify(2,1) has " + std::to_string(k2.size()) + " classes, expected 1");
  if (k2.size() == 1) {
    const Graph g(k2[0].representative);
    e.that(girth(g) == 5 && g.order() == 5, "classify(2,1) class is not the 5-cycle");
    e.that(p_equivalent(k2[0].representative, src.matrix("c5_hs")), "classify(2,1) class not equivalent to c5_hs");
  }
  const auto k3 = classify(3, 1);
  e.that(k3.size() == 1, "classify(3,1) has " + std::to_string(k3.size()) + " classes, expected 1");
  if (k3.size() == 1)
    e.that(p_equivalent(k3[0].representative, src.matrix("petersen_hs")),
           "classify(3,1) class not equivalent to petersen_hs");
  const auto k4 = classify(4, 1);
  e.that(k4.empty(), "classify(4,1) has " + std::to_string(k4.size()) + " classes, expected 0");
}

inline void kappa3_m3(Expect& e, const CorpusSource& src) {
  const auto cs = classify(3, 3);
  std::multiset<std::size_t> ps;
  for (const auto& c : cs) ps.insert(c.fundamental_period);
  e.that(cs.size() == 2, "classify(3,3) has " + std::to_string(cs.size()) + " classes, expected 2");
  e.that(ps == std::multiset<std::size_t>{1, 3}, "fundamental periods " + join(periods(cs)) + ", expected {1,3}");
  for (const auto& c : cs) {
    if (c.fundamental_period != 3) continue;
    e.that(p_equivalent(c.representative, src.matrix("a2_t2")), "period-3 class not equivalent to a2_t2");
    e.that(is_configuration_10_3(c.representative), "period-3 neighbourhood geometry is not a 10_3 with polarity form");
  }
}

inline void kappa4_m2(Expect& e, const CorpusSource& src, unsigned workers, double single_limit,
                      double parallel_limit) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const auto single = classify(4, 2, 1);
  const double s1 = std::chrono::duration<double>(clock::now() - t0).count();
  const auto t1 = clock::now();
  const auto multi = classify(4, 2, workers);
  const double s2 = std::chrono::duration<double>(clock::now() - t1).count();
  e.that(single.size() == 1, "classify(4,2) has " + std::to_string(single.size()) + " classes, expected 1");
  if (single.size() == 1)
    e.that(p_equivalent(single[0].representative, assemble(src.matrix("p_1971"), 4).assembled),
           "classify(4,2) class not equivalent to assemble(p_1971, 4)");
  e.that(same_classes(single, multi), "output differs between 1 and " + std::to_string(workers) + " workers");
  e.that(s1 < single_limit, "single-threaded run exceeded " + std::to_string(single_limit) + " s");
  e.that(s2 < parallel_limit, std::to_string(workers) + "-worker run exceeded " + std::to_string(parallel_limit) + " s");
  std::ostringstream n;
  n << "1 worker " << s1 << " s, " << workers << " workers " << s2 << " s";
  e.note(n.str());
}

inline void counterexample(Expect& e, const CorpusSource& src) {
  const auto a1 = src.matrix("a1_t1");
  const IntMatrix t = theta(a1);
  e.that(t != a1.to_int(), "theta(a1_t1) equals a1_t1");
  if (!is_binary(t)) {
    e.that(false, "theta(a1_t1) is not a (0,1)-matrix");
    return;
  }
  const BinMatrix tb(t);
  e.that(theta(tb) == t, "theta(a1_t1) is not a fixed point");
  e.that(p_equivalent(tb, src.matrix("petersen_hs")), "theta(a1_t1) not equivalent to petersen_hs");
  e.that(classify_membership(a1).lsz(), "a1_t1 fails one of (L), (S), (Z)");
}

inline void operator_laws(Expect& e, std::uint64_t seed, std::size_t cases) {
  testing::Rng rng(seed);
  std::size_t bad_sums = 0, bad_sym = 0, bad_diag = 0, bad_iff = 0, bad_equiv = 0, in_d = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = testing::uniform(rng, 1, 12);
    IntMatrix a;
    std::int64_t kappa = 0;
    if (c % 2 == 0) {
      kappa = static_cast<std::int64_t>(testing::uniform(rng, 0, n));
      a = testing::random_d_matrix(n, static_cast<std::size_t>(kappa), 3 * n, rng).to_int();
    } else {
      kappa = static_cast<std::int64_t>(testing::uniform(rng, 0, 10)) - 4;
      a = testing::random_z_matrix(n, kappa, testing::uniform(rng, 0, 3 * n), rng);
    }
    const IntMatrix t = theta(a);
    const auto sums = row_col_sums(t);
    if (!sums.kappa || *sums.kappa != delta(static_cast<std::int64_t>(n), kappa)) ++bad_sums;
    if (!is_symmetric(t)) ++bad_sym;
    bool diag_nonpositive = true, diag_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      diag_nonpositive = diag_nonpositive && t(i, i) <= 0;
      diag_zero = diag_zero && t(i, i) == 0;
    }
    if (!diag_nonpositive) ++bad_diag;
    const bool member = is_binary(a);
    in_d += member ? 1 : 0;
    if (diag_zero != member) ++bad_iff;
    const auto pi = Permutation::random(n, rng);
    if (theta(conjugate(a, pi)) != conjugate(t, pi)) ++bad_equiv;
  }
  e.that(bad_sums == 0, std::to_string(bad_sums) + " cases with row/column sums != delta(k)");
  e.that(bad_sym == 0, std::to_string(bad_sym) + " asymmetric outputs");
  e.that(bad_diag == 0, std::to_string(bad_diag) + " outputs with a positive diagonal entry");
  e.that(bad_iff == 0, std::to_string(bad_iff) + " cases where zero diagonal and (0,1)-membership disagree");
  e.that(bad_equiv == 0, std::to_string(bad_equiv) + " conjugation equivariance failures");
  e.note(std::to_string(cases) + " cases (" + std::to_string(in_d) + " in D), seed " + std::to_string(seed));
}

inline void equivalence_oracle(Expect& e, const CorpusSource& src, std::uint64_t seed, std::size_t pairs) {
  testing::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t disagree = 0, bad_witness = 0, equivalent = 0;
  for (std::size_t c = 0; c < pairs; ++c) {
    const std::size_t n = testing::uniform(rng, 1, 8);
    const double density = 0.15 + 0.1 * static_cast<double>(testing::uniform(rng, 0, 7));
    const BinMatrix a = testing::random_binary(n, density, rng);
    BinMatrix b;
    switch (c % 3) {
      case 0: b = conjugate(a, Permutation::random(n, rng)); break;
      case 1: b = testing::random_binary(n, density, rng); break;
      default: {
        // a relabelled copy with one 1 moved within a row
        b = conjugate(a, Permutation::random(n, rng));
        const std::size_t i = testing::uniform(rng, 0, n - 1), j = testing::uniform(rng, 0, n - 1);
        const std::size_t l = testing::uniform(rng, 0, n - 1);
        if (b(i, j) != b(i, l)) {
          b.set(i, j, !b(i, j));
          b.set(i, l, !b(i, l));
        }
      }
    }
    const bool oracle = testing::brute_force_p_equivalence(a, b).has_value();
    const auto w = p_equivalence_witness(a, b);
    if (oracle != w.has_value()) ++disagree;
    if (w && conjugate(a, *w) != b) ++bad_witness;
    equivalent += oracle ? 1 : 0;
  }
  e.that(disagree == 0, std::to_string(disagree) + " pairs where p_equivalent disagrees with the n! scan");
  e.that(bad_witness == 0, std::to_string(bad_witness) + " witnesses that do not verify");
  e.note(std::to_string(pairs) + " pairs, " + std::to_string(equivalent) + " equivalent");

  for (const auto& name : corpus_names()) {
    const auto a = src.matrix(name);
    const auto ref = canonical_form(a).canonical_matrix;
    std::size_t moved = 0;
    for (int t = 0; t < 100; ++t)
      if (canonical_form(conjugate(a, Permutation::random(a.order(), rng))).canonical_matrix != ref) ++moved;
    e.that(moved == 0, "canonical form of " + name + " changed under " + std::to_string(moved) + " conjugations");
  }
}

inline void geometry_certificates(Expect& e, const CorpusSource& src) {
  const Graph pet(src.matrix("petersen_hs"));
  e.that(girth(pet) == 5, "petersen girth " + std::to_string(girth(pet)));
  e.that(diameter(pet) == 2, "petersen diameter " + std::to_string(diameter(pet)));
  e.that(triangle_census(pet).total == 0, "petersen has triangles");
  e.that(is_terwilliger(pet, 1), "petersen is not Terwilliger with mu = 1");

  const auto t2 = src.get("a2_t2");
  const Graph g2(t2.matrix);
  e.that(girth(g2) == 3, "T2 girth " + std::to_string(girth(g2)));
  e.that(is_terwilliger(g2, 1), "T2 is not Terwilliger with mu = 1");
  const auto tc = triangle_census(g2);
  std::vector<std::size_t> free_vertices;
  for (std::size_t v = 0; v < g2.order(); ++v)
    if (tc.per_vertex[v] == 0) free_vertices.push_back(v);
  e.that(free_vertices.size() == 1, "T2 has " + std::to_string(free_vertices.size()) + " triangle-free vertices");
  if (free_vertices.size() == 1) {
    const std::size_t v = free_vertices[0];
    e.that(v < t2.labels.size() && t2.labels[v] == "c", "T2 triangle-free vertex is not c");
    e.that(is_centre_radius2(g2, v), "T2 triangle-free vertex is not a centre of radius 2");
  }

  const Graph g1(src.matrix("a1_t1"));
  e.that(is_terwilliger(g1, 1), "T1 is not Terwilliger with mu = 1");
  e.that(triangle_census(g1).total == 2, "T1 has " + std::to_string(triangle_census(g1).total) + " triangles");
}

inline void standard_form_pipeline(Expect& e, const CorpusSource& src, std::uint64_t seed) {
  testing::Rng rng(seed ^ 0x51ed270b27fd0f5dULL);
  const auto pet = src.matrix("petersen_hs");
  const auto reference = to_hs_form(decompose(pet).form).form.assembled;
  e.that(is_hs_form(reference), "canonical HS representative is not an HS-form");
  std::size_t differ = 0;
  for (int t = 0; t < 100; ++t) {
    const auto x = conjugate(pet, Permutation::random(pet.order(), rng));
    if (to_hs_form(decompose(x).form).form.assembled != reference) ++differ;
  }
  e.that(differ == 0, std::to_string(differ) + " of 100 conjugates gave a different HS-form");

  std::size_t outputs = 0, violations = 0;
  for (int kappa = 2; kappa <= 4; ++kappa)
    for (unsigned m = 1; m <= 8; ++m)
      for (const auto& c : classify(kappa, m)) {
        ++outputs;
        const auto p = extract_p(c.representative, kappa);
        if (!block_constraints_hold(p, kappa)) ++violations;
      }
  e.that(violations == 0, std::to_string(violations) + " classify outputs violate the block constraints");
  e.note(std::to_string(outputs) + " classify outputs checked for kappa 2..4, m 1..8");
}

inline void diophantine(Expect& e) {
  const auto sweep = dio_sweep(200, 8, -14, 14);
  std::size_t bad = 0;
  const auto recheck = [&](const std::vector<DioSolution>& v) {
    for (const auto& s : v) {
      std::int64_t x = s.kappa;
      for (std::int64_t i = 0; i < s.m; ++i) x = delta(s.n, x);
      if (x != s.kappa) ++bad;
    }
  };
  recheck(sweep.square_plus_one);
  recheck(sweep.shifted_square);
  recheck(sweep.exceptions);
  e.that(bad == 0, std::to_string(bad) + " reported solutions fail recomputation");
  // every kappa in range has n = k^2 + 1 <= 200, and each such n is a fixed point for all m
  e.that(sweep.square_plus_one.size() == 29 * 8, "family n = k^2+1 has " +
                                                    std::to_string(sweep.square_plus_one.size()) +
                                                    " members, expected 232");
  std::ostringstream n;
  n << sweep.square_plus_one.size() << " with n = k^2+1, " << sweep.shifted_square.size()
    << " with n = (k-1)^2+2 and m even, " << sweep.exceptions.size() << " exceptions";
  for (const auto& s : sweep.exceptions) n << " EXCEPTION(n=" << s.n << ",m=" << s.m << ",k=" << s.kappa << ")";
  e.note(n.str());
}

inline void cross_strategy(Expect& e) {
  for (int kappa = 2; kappa <= 3; ++kappa)
    for (unsigned m = 1; m <= 6; ++m) {
      const auto search = standard_form_solutions(kappa, m);
      const auto census = census_solutions(kappa, m);
      e.that(search.size() == census.size(), "kappa " + std::to_string(kappa) + ", m " + std::to_string(m) +
                                                 ": search " + std::to_string(search.size()) + " classes, census " +
                                                 std::to_string(census.size()));
      e.that(search == census, "kappa " + std::to_string(kappa) + ", m " + std::to_string(m) + ": class sets differ");
    }
}

}  // namespace detail

/// Pinned acceptance limits, in seconds.
struct SuiteLimits {
  static constexpr double kFixedPoints = 10;
  static constexpr double kKappa3 = 60;
  static constexpr double kKappa4Single = 600;
  static constexpr double kKappa4Parallel = 180;
  static constexpr double kCounterexample = 1;
  static constexpr double kOperatorLaws = 30;
  static constexpr double kEquivalence = 60;
  static constexpr double kGeometry = 1;
  static constexpr double kStandardForm = 30;
  static constexpr double kDiophantine = 10;
  static constexpr double kCrossStrategy = 120;
  static constexpr std::size_t kOperatorCases = 10000;
  static constexpr std::size_t kEquivalencePairs = 1000;
};

/// Runs one named check; exceptions and exceeded limits count as failures.
inline CheckResult run_check(const std::string& name, double limit, const std::function<void(detail::Expect&)>& body) {
  using clock = std::chrono::steady_clock;
  CheckResult r;
  r.name = name;
  r.limit_seconds = limit;
  detail::Expect e;
  const auto t0 = clock::now();
  try {
    body(e);
  } catch (const std::exception& ex) {
    e.that(false, std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  if (limit > 0) e.that(r.seconds < limit, "took " + std::to_string(r.seconds) + " s, limit " + std::to_string(limit) + " s");
  r.passed = e.ok();
  r.detail = e.detail();
  return r;
}

/// Pinned digests of the corpus matrices, one check per entry.
inline std::vector<CheckResult> corpus_checks(const SuiteOptions& opt = {}) {
  const CorpusSource src(opt.corpus_dir);
  std::vector<CheckResult> out;
  for (const auto& name : corpus_names()) {
    out.push_back(run_check("corpus:" + name, 0, [&](detail::Expect& e) {
      const auto got = matrix_checksum(src.matrix(name));
      e.that(got == pinned_checksum(name), "checksum " + hex64(got) + ", pinned " + hex64(pinned_checksum(name)));
    }));
    if (opt.on_result) opt.on_result(out.back());
  }
  return out;
}

/// The numbered acceptance checks, in order.
inline std::vector<CheckResult> acceptance_checks(const SuiteOptions& opt = {}) {
  const CorpusSource src(opt.corpus_dir);
  using L = SuiteLimits;
  std::vector<CheckResult> out;
  const auto add = [&](const std::string& name, double limit, const std::function<void(detail::Expect&)>& body) {
    out.push_back(run_check(name, limit, body));
    if (opt.on_result) opt.on_result(out.back());
  };
  add("1-fixed-points-m1", L::kFixedPoints, [&](auto& e) { detail::fixed_points_m1(e, src); });
  add("2-kappa3-period3", L::kKappa3, [&](auto& e) { detail::kappa3_m3(e, src); });
  add("3-kappa4-m2", 0, [&](auto& e) {
    detail::kappa4_m2(e, src, std::max(1U, opt.workers), L::kKappa4Single, L::kKappa4Parallel);
  });
  add("4-counterexample", L::kCounterexample, [&](auto& e) { detail::counterexample(e, src); });
  add("5-operator-laws", L::kOperatorLaws, [&](auto& e) { detail::operator_laws(e, opt.seed, L::kOperatorCases); });
  add("6-equivalence-oracle", L::kEquivalence,
      [&](auto& e) { detail::equivalence_oracle(e, src, opt.seed, L::kEquivalencePairs); });
  add("7-geometry-certificates", L::kGeometry, [&](auto& e) { detail::geometry_certificates(e, src); });
  add("8-standard-form-pipeline", L::kStandardForm, [&](auto& e) { detail::standard_form_pipeline(e, src, opt.seed); });
  add("9-diophantine-sweep", L::kDiophantine, [&](auto& e) { detail::diophantine(e); });
  add("10-cross-strategy", L::kCrossStrategy, [&](auto& e) { detail::cross_strategy(e); });
  return out;
}

/// Corpus digests followed by the acceptance checks.
inline std::vector<CheckResult> run_suite(const SuiteOptions& opt = {}) {
  auto out = corpus_checks(opt);
  auto rest = acceptance_checks(opt);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace thetalab
