#pragma once

// The "mat v1" text format:
//
//   # optional comment lines, e.g. "# labels: c c1 c2 ..."
//   n
//   a00 a01 ... a0(n-1)
//   ...
//
// Each matrix line holds exactly n integers separated by single spaces.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/matrix.hpp"

namespace thetalab {

struct MatFile {
  IntMatrix matrix;
  std::vector<std::string> labels;    ///< from a "# labels:" line, empty if absent
  std::vector<std::string> comments;  ///< other comment lines, without the leading "# "
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline IntMatrix::value_type parse_integer(std::string_view tok, std::size_t line_no) {
  IntMatrix::value_type v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not an integer");
  return v;
}

inline std::vector<std::string_view> split_single_spaces(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> toks;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(' ', start);
    const auto tok = line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    if (tok.empty())
      throw ParseError("line " + std::to_string(line_no) + ": entries must be separated by single spaces");
    toks.push_back(tok);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return toks;
}

}  // namespace detail

inline MatFile read_mat(std::istream& in) {
  MatFile f;
  std::size_t n = 0;
  bool have_order = false;
  std::size_t rows_read = 0;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body(line);
      body.remove_prefix(1);
      while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      constexpr std::string_view kLabels = "labels:";
      if (body.substr(0, kLabels.size()) == kLabels)
        f.labels = detail::split_words(body.substr(kLabels.size()));
      else
        f.comments.emplace_back(body);
      continue;
    }
    if (!have_order) {
      const auto v = detail::parse_integer(line, line_no);
      if (v <= 0) throw ParseError("line " + std::to_string(line_no) + ": order must be positive");
      n = static_cast<std::size_t>(v);
      f.matrix = IntMatrix(n);
      have_order = true;
      continue;
    }
    if (rows_read == n) throw ParseError("line " + std::to_string(line_no) + ": more than n matrix rows");
    const auto toks = detail::split_single_spaces(line, line_no);
    if (toks.size() != n)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " entries, got " +
                       std::to_string(toks.size()));
    for (std::size_t j = 0; j < n; ++j) f.matrix(rows_read, j) = detail::parse_integer(toks[j], line_no);
    ++rows_read;
  }
  if (!have_order) throw ParseError("missing matrix order");
  if (rows_read != n)
    throw ParseError("expected " + std::to_string(n) + " matrix rows, got " + std::to_string(rows_read));
  if (!f.labels.empty() && f.labels.size() != n)
    throw ParseError("labels line names " + std::to_string(f.labels.size()) + " vertices, matrix has " +
                     std::to_string(n));
  return f;
}

inline MatFile parse_mat(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_mat(in);
}

inline MatFile read_mat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_mat(in);
}

/// Converts a parsed file, requiring every entry to be 0 or 1.
inline BinMatrix to_binary(const MatFile& f) {
  try {
    return BinMatrix(f.matrix);
  } catch (const NotBinary& e) {
    throw ParseError(std::string("binary matrix file: ") + e.what());
  }
}

inline void write_mat(std::ostream& out, const IntMatrix& m, const std::vector<std::string>& labels = {},
                      const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  if (!labels.empty()) {
    out << "# labels:";
    for (const auto& l : labels) out << ' ' << l;
    out << '\n';
  }
  out << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

inline std::string format_mat(const IntMatrix& m, const std::vector<std::string>& labels = {},
                              const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  write_mat(out, m, labels, comments);
  return out.str();
}

inline std::string format_mat(const BinMatrix& m, const std::vector<std::string>& labels = {},
                              const std::vector<std::string>& comments = {}) {
  return format_mat(m.to_int(), labels, comments);
}

inline void write_mat_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

/// 64-bit FNV-1a digest, used to pin corpus transcriptions and to echo inputs in reports.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = kDigits[v & 0xF];
  return s;
}

}  // namespace thetalab
