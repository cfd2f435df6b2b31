#pragma once

#include <initializer_list>
#include <vector>

#include "thetalab/thetalab.hpp"

namespace thetalab::test {

inline BinMatrix named(const char* name) { return corpus(name).matrix; }

inline BinMatrix from_edges(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
  BinMatrix a(n);
  for (auto [u, v] : edges) {
    a.set(u, v);
    a.set(v, u);
  }
  return a;
}

inline BinMatrix from_adjacency_lists(const std::vector<std::vector<std::size_t>>& lists) {
  BinMatrix a(lists.size());
  for (std::size_t u = 0; u < lists.size(); ++u)
    for (auto v : lists[u]) a.set(u, v);
  return a;
}

inline BinMatrix cycle(std::size_t n) {
  BinMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set(i, (i + 1) % n);
    a.set((i + 1) % n, i);
  }
  return a;
}

inline BinMatrix complete(std::size_t n) {
  BinMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a.set(i, j);
  return a;
}

inline BinMatrix k23() {
  BinMatrix a(5);
  for (std::size_t u : {0, 1})
    for (std::size_t v : {2, 3, 4}) {
      a.set(u, v);
      a.set(v, u);
    }
  return a;
}

}  // namespace thetalab::test
