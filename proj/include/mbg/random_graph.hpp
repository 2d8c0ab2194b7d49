// Uniform G(n,m) sampling by partial Fisher-Yates over edge ids.
#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "mbg/graph.hpp"
#include "mbg/rng.hpp"

namespace mbg {

inline SimpleGraph sample_gnm(int n, std::size_t m, Rng& rng) {
  const std::uint64_t total = edge_count(n);
  if (m > total) throw std::invalid_argument("sample_gnm: m exceeds edge count");
  std::vector<EdgeId> ids(total);
  std::iota(ids.begin(), ids.end(), 0u);
  SimpleGraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(total - i));
    std::swap(ids[i], ids[j]);
    g.add_edge(ids[i]);
  }
  return g;
}

}  // namespace mbg
