#pragma once

// Built-in named matrices. Graph drawings use vertex labels c, c1, c11, ...;
// HS-forms use v0, v1, v11, ...
// Each transcription is pinned by the FNV-1a digest of its unlabelled
// "mat v1" rendering.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"
#include "thetalab/matrix_io.hpp"
#include "thetalab/standard_form.hpp"

namespace thetalab {

struct NamedMatrix {
  std::string name;
  BinMatrix matrix;
  std::vector<std::string> labels;
  std::string provenance;
};

namespace detail {

struct CorpusEntry {
  std::string_view name;
  std::string_view provenance;
  std::string_view text;  ///< empty for entries derived from another entry
  std::uint64_t checksum;
};

inline constexpr std::string_view kC5Hs = R"(# labels: v0 v1 v2 v11 v21
5
0 1 1 0 0
1 0 0 1 0
1 0 0 0 1
0 1 0 0 1
0 0 1 1 0
)";

inline constexpr std::string_view kPetersenHs = R"(# labels: v0 v1 v2 v3 v11 v12 v21 v22 v31 v32
10
0 1 1 1 0 0 0 0 0 0
1 0 0 0 1 1 0 0 0 0
1 0 0 0 0 0 1 1 0 0
1 0 0 0 0 0 0 0 1 1
0 1 0 0 0 0 1 0 1 0
0 1 0 0 0 0 0 1 0 1
0 0 1 0 1 0 0 0 0 1
0 0 1 0 0 1 0 0 1 0
0 0 0 1 1 0 0 1 0 0
0 0 0 1 0 1 1 0 0 0
)";

inline constexpr std::string_view kA1T1 = R"(# labels: c c1 c2 c3 c11 c21 c31 c12 c22 c32
10
0 1 1 1 0 0 0 0 0 0
1 0 0 0 1 0 0 1 0 0
1 0 0 0 0 1 0 0 1 0
1 0 0 0 0 0 1 0 0 1
0 1 0 0 0 1 1 0 0 0
0 0 1 0 1 0 1 0 0 0
0 0 0 1 1 1 0 0 0 0
0 1 0 0 0 0 0 0 1 1
0 0 1 0 0 0 0 1 0 1
0 0 0 1 0 0 0 1 1 0
)";

inline constexpr std::string_view kA2T2 = R"(# labels: c c1 c2 c3 c11 c12 c21 c22 c31 c32
10
0 1 1 1 0 0 0 0 0 0
1 0 0 0 1 1 0 0 0 0
1 0 0 0 0 0 1 1 0 0
1 0 0 0 0 0 0 0 1 1
0 1 0 0 0 1 0 0 0 1
0 1 0 0 1 0 1 0 0 0
0 0 1 0 0 1 0 1 0 0
0 0 1 0 0 0 1 0 1 0
0 0 0 1 0 0 0 1 0 1
0 0 0 1 1 0 0 0 1 0
)";

inline constexpr std::string_view kP1971 = R"(# labels: v11 v12 v13 v21 v22 v23 v31 v32 v33 v41 v42 v43
12
0 0 0 1 0 0 1 0 0 1 0 0
0 0 0 0 1 0 0 1 0 0 1 0
0 0 0 0 0 1 0 0 1 0 0 1
1 0 0 0 0 0 1 0 0 0 1 0
0 1 0 0 0 0 0 1 0 0 0 1
0 0 1 0 0 0 0 0 1 1 0 0
1 0 0 1 0 0 0 0 0 0 0 1
0 1 0 0 1 0 0 0 0 1 0 0
0 0 1 0 0 1 0 0 0 0 1 0
1 0 0 0 0 1 0 1 0 0 0 0
0 1 0 1 0 0 0 0 1 0 0 0
0 0 1 0 1 0 1 0 0 0 0 0
)";

inline constexpr std::array<CorpusEntry, 6> kCorpus{{
    {"c5_hs", "HS-form of the 5-cycle", kC5Hs, 0x5c835a4ce8e169b0ULL},
    {"petersen_hs", "HS-form of the Petersen graph", kPetersenHs, 0xe173ccd3e447e6deULL},
    {"a1_t1", "adjacency matrix A1 of the Terwilliger graph T1", kA1T1, 0x93f2cdf07f4737ceULL},
    {"a2_t2", "adjacency matrix A2 of the Terwilliger graph T2 (configuration 10_3F)", kA2T2, 0x15ad8912544d099eULL},
    {"p_1971", "12x12 block P of the HS-form of the 17_4 configuration #1971", kP1971, 0x8625684bcfaf0478ULL},
    {"s_1971", "S_HS(P) of order 17 assembled from p_1971 with kappa = 4", "", 0xc291c5e3842d274bULL},
}};

inline const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : kCorpus)
    if (e.name == name) return e;
  throw UnknownName("unknown corpus matrix '" + std::string(name) + "'");
}

inline std::vector<std::string> hs_labels(int kappa) {
  std::vector<std::string> l{"v0"};
  for (int i = 1; i <= kappa; ++i) l.push_back("v" + std::to_string(i));
  for (int i = 1; i <= kappa; ++i)
    for (int j = 1; j < kappa; ++j) l.push_back("v" + std::to_string(i) + std::to_string(j));
  return l;
}

}  // namespace detail

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& e : detail::kCorpus) names.emplace_back(e.name);
  return names;
}

/// Digest of the unlabelled "mat v1" rendering.
inline std::uint64_t matrix_checksum(const BinMatrix& m) { return fnv1a64(format_mat(m)); }

inline std::uint64_t pinned_checksum(std::string_view name) { return detail::corpus_entry(name).checksum; }

/// Builds a named matrix from "mat v1" text, e.g. a corpus file read from disk.
inline NamedMatrix named_from_text(std::string_view name, std::string_view text) {
  const auto& e = detail::corpus_entry(name);
  auto f = parse_mat(text);
  return {std::string(e.name), to_binary(f), std::move(f.labels), std::string(e.provenance)};
}

inline NamedMatrix corpus(std::string_view name) {
  const auto& e = detail::corpus_entry(name);
  if (e.name == "s_1971") {
    const auto p = corpus("p_1971");
    return {std::string(e.name), assemble(p.matrix, 4).assembled, detail::hs_labels(4), std::string(e.provenance)};
  }
  return named_from_text(name, e.text);
}

/// Full "mat v1" text of a corpus entry, with name, provenance and labels.
inline std::string corpus_text(std::string_view name) {
  const auto m = corpus(name);
  return format_mat(m.matrix, m.labels, {"name: " + m.name, "source: " + m.provenance});
}

}  // namespace thetalab
