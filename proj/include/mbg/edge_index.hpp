// Canonical edge indexing on K_n: unordered pairs {u,v}, u < v, ranked in
// lexicographic order. Every module shares this numbering, so seeds and
// "smallest index" conventions mean the same thing everywhere.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mbg {

using Vertex = int;
using EdgeId = std::uint32_t;

constexpr std::uint64_t edge_count(int n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Rank of {min(u,v), max(u,v)} among all pairs of [0,n) in lexicographic
// order. Inverse of edge_endpoints.
inline EdgeId edge_index(Vertex u, Vertex v, int n) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge_index: vertex out of range");
  if (u == v) throw std::invalid_argument("edge_index: self-loop");
  if (u > v) std::swap(u, v);
  // Pairs starting with u' < u: sum_{i<u} (n-1-i) = u*n - u(u+1)/2.
  const std::uint64_t base =
      static_cast<std::uint64_t>(u) * n - static_cast<std::uint64_t>(u) * (u + 1) / 2;
  return static_cast<EdgeId>(base + (v - u - 1));
}

inline std::pair<Vertex, Vertex> edge_endpoints(EdgeId e, int n) {
  if (e >= edge_count(n))
    throw std::invalid_argument("edge_endpoints: edge id out of range: " + std::to_string(e));
  // Find u = largest vertex with base(u) <= e; rows shrink so a linear walk
  // is fine for small n, but binary search keeps large boards cheap.
  Vertex lo = 0, hi = n - 1;
  auto base = [n](Vertex u) {
    return static_cast<std::uint64_t>(u) * n - static_cast<std::uint64_t>(u) * (u + 1) / 2;
  };
  while (lo + 1 < hi) {
    const Vertex mid = lo + (hi - lo) / 2;
    if (base(mid) <= e)
      lo = mid;
    else
      hi = mid;
  }
  const Vertex u = (base(hi) <= e) ? hi : lo;
  const Vertex v = static_cast<Vertex>(e - base(u)) + u + 1;
  return {u, v};
}

}  // namespace mbg
