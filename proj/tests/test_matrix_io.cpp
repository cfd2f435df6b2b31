#include <gtest/gtest.h>

#include "support.hpp"
#include "thetalab/testing/random_matrices.hpp"

namespace thetalab {
namespace {

TEST(MatIo, ParsesCommentsLabelsAndRows) {
  const auto f = parse_mat("# name: demo\n# labels: a b\n2\n0 1\n-3 4\n");
  EXPECT_EQ(f.matrix, (IntMatrix{{0, 1}, {-3, 4}}));
  EXPECT_EQ(f.labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(f.comments, (std::vector<std::string>{"name: demo"}));
}

TEST(MatIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_mat(""), ParseError);
  EXPECT_THROW(parse_mat("2\n0 1\n"), ParseError);             // missing row
  EXPECT_THROW(parse_mat("2\n0 1\n1\n"), ParseError);          // ragged
  EXPECT_THROW(parse_mat("2\n0 1 0\n1 0\n"), ParseError);      // ragged
  EXPECT_THROW(parse_mat("2\n0  1\n1 0\n"), ParseError);       // double space
  EXPECT_THROW(parse_mat("2\n0 1\n1 0\n0 0\n"), ParseError);   // extra row
  EXPECT_THROW(parse_mat("2\n0 x\n1 0\n"), ParseError);
  EXPECT_THROW(parse_mat("0\n"), ParseError);
  EXPECT_THROW(parse_mat("-1\n"), ParseError);
  EXPECT_THROW(parse_mat("# labels: a\n2\n0 1\n1 0\n"), ParseError);
}

TEST(MatIo, BinaryFilesRequireZeroOne) {
  EXPECT_THROW(to_binary(parse_mat("2\n0 2\n1 0\n")), ParseError);
  EXPECT_EQ(to_binary(parse_mat("2\n0 1\n1 0\n")), (BinMatrix{{0, 1}, {1, 0}}));
}

TEST(MatIo, RoundTripIsByteIdentical) {
  testing::Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = testing::uniform(rng, 1, 12);
    const auto a = testing::random_z_matrix(n, static_cast<std::int64_t>(testing::uniform(rng, 0, 6)) - 2, 3 * n, rng);
    const auto text = format_mat(a, {}, {"seed 3"});
    const auto back = parse_mat(text);
    EXPECT_EQ(back.matrix, a);
    EXPECT_EQ(format_mat(back.matrix, back.labels, back.comments), text);
  }
}

TEST(MatIo, CorpusTextsRoundTrip) {
  for (const auto& name : corpus_names()) {
    const auto text = corpus_text(name);
    const auto f = parse_mat(text);
    EXPECT_EQ(to_binary(f), corpus(name).matrix) << name;
    EXPECT_EQ(format_mat(f.matrix, f.labels, f.comments), text) << name;
  }
}

TEST(Digest, KnownValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}

}  // namespace
}  // namespace thetalab
