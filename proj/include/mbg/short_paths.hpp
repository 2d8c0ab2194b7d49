// Vertex-disjoint short paths between endpoint pairs. The layered
// construction grows reachability sets D+_{i,j} from each a_i and D-_{i,j}
// from each b_i with target sizes f(j) = q^j (q = r / (8 ln n)) capped at
// lambda*n/r and then n/(lambda*r), and joins the final layers by a common
// vertex or a crossing edge. When q <= 1 makes the layer sizes non-growing,
// a greedy sequential BFS takes over and the result is flagged.
//
// Returned paths are simple, mutually disjoint, avoid the forbidden set, and
// have length at most ln n + 3; anything longer is reported as a failure.
#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbg/graph.hpp"
#include "mbg/half_expander.hpp"

namespace mbg {

struct ShortPathsResult {
  bool ok = false;
  std::vector<std::vector<Vertex>> paths;
  bool used_fallback = false;
  std::optional<std::size_t> failed_pair;
  std::optional<int> failed_layer;
  std::string message;

  static ShortPathsResult failure(std::size_t pair, std::optional<int> layer,
                                  std::string msg, bool fallback) {
    ShortPathsResult r;
    r.failed_pair = pair;
    r.failed_layer = layer;
    r.message = std::move(msg);
    r.used_fallback = fallback;
    return r;
  }
};

inline double short_path_length_cap(int n) { return std::log(n) + 3.0; }

namespace detail {

// Strict layered construction; callers check q > 1 first.
inline ShortPathsResult layered_disjoint_paths(
    const SimpleGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs,
    const std::vector<char>& forbidden, const HalfExpanderParams& params, double q) {
  const int n = g.n();
  const double cap = short_path_length_cap(n);
  const std::size_t k = pairs.size();

  const double small_cap = params.lambda * n / params.r;
  const int j0 = small_cap <= 1.0
                     ? 0
                     : static_cast<int>(std::ceil(std::log(small_cap) / std::log(q)));
  auto layer_target = [&](int j) -> std::size_t {
    if (j < j0) return static_cast<std::size_t>(std::ceil(std::pow(q, j)));
    if (j == j0) return static_cast<std::size_t>(std::ceil(small_cap));
    return static_cast<std::size_t>(std::ceil(n / (params.lambda * params.r)));
  };

  std::vector<char> used = forbidden;
  ShortPathsResult result;

  // parent[side][i][v] = predecessor of v one layer closer to the endpoint.
  std::vector<std::vector<std::vector<Vertex>>> parent(
      2, std::vector<std::vector<Vertex>>(k, std::vector<Vertex>(n, -1)));
  std::vector<std::vector<std::vector<Vertex>>> layer(
      2, std::vector<std::vector<Vertex>>(k));
  std::vector<char> done(k, 0);

  for (std::size_t i = 0; i < k; ++i) {
    const auto [a, b] = pairs[i];
    if (g.has_edge(a, b)) {  // adjacency short-circuit
      result.paths.push_back({a, b});
      done[i] = 1;
    } else {
      layer[0][i] = {a};
      layer[1][i] = {b};
    }
    used[a] = used[b] = 1;
  }

  for (int j = 1; j <= j0 + 1; ++j) {
    const std::size_t want = layer_target(j);
    for (std::size_t i = 0; i < k; ++i) {
      if (done[i]) continue;
      for (int side = 0; side < 2; ++side) {
        std::vector<Vertex> next;
        for (Vertex v : layer[side][i]) {
          for (Vertex w : g.neighbors(v)) {
            if (used[w] || parent[side][i][w] >= 0) continue;
            parent[side][i][w] = v;
            next.push_back(w);
          }
        }
        std::sort(next.begin(), next.end());
        if (next.size() < want) {
          return ShortPathsResult::failure(
              i, j, "layer starved: |A| = " + std::to_string(next.size()) +
                        " < f(j) = " + std::to_string(want), false);
        }
        for (std::size_t idx = want; idx < next.size(); ++idx)
          parent[side][i][next[idx]] = -1;  // not taken into the layer
        next.resize(want);
        for (Vertex w : next) used[w] = 1;
        layer[side][i] = std::move(next);
      }
    }
  }

  auto trace = [&](int side, std::size_t i, Vertex leaf) {
    std::vector<Vertex> chain{leaf};
    Vertex cur = leaf;
    while (parent[side][i][cur] >= 0) {
      cur = parent[side][i][cur];
      chain.push_back(cur);
    }
    return chain;  // leaf ... endpoint
  };

  // Final layers: neighborhoods minus everything reserved, overlap allowed.
  for (std::size_t i = 0; i < k; ++i) {
    if (done[i]) continue;
    std::vector<char> plus(n, 0), minus(n, 0);
    std::vector<Vertex> pparent(n, -1), mparent(n, -1);
    for (Vertex v : layer[0][i])
      for (Vertex w : g.neighbors(v))
        if (!used[w] && !plus[w]) {
          plus[w] = 1;
          pparent[w] = v;
        }
    for (Vertex v : layer[1][i])
      for (Vertex w : g.neighbors(v))
        if (!used[w] && !minus[w]) {
          minus[w] = 1;
          mparent[w] = v;
        }

    std::vector<Vertex> path;
    for (Vertex w = 0; w < n && path.empty(); ++w) {
      if (plus[w] && minus[w]) {
        // Meet at a common vertex.
        auto up = trace(0, i, pparent[w]);
        auto down = trace(1, i, mparent[w]);
        path.assign(up.rbegin(), up.rend());
        path.push_back(w);
        path.insert(path.end(), down.begin(), down.end());
      }
    }
    if (path.empty()) {
      // Look for a crossing edge.
      for (Vertex x = 0; x < n && path.empty(); ++x) {
        if (!plus[x]) continue;
        for (Vertex y : g.neighbors(x)) {
          if (!minus[y] || y == x) continue;
          auto up = trace(0, i, pparent[x]);
          auto down = trace(1, i, mparent[y]);
          path.assign(up.rbegin(), up.rend());
          path.push_back(x);
          path.push_back(y);
          path.insert(path.end(), down.begin(), down.end());
          break;
        }
      }
    }
    if (path.empty())
      return ShortPathsResult::failure(i, j0 + 2, "final layers do not meet", false);
    if (static_cast<double>(path.size()) - 1.0 > cap)
      return ShortPathsResult::failure(
          i, std::nullopt,
          "path exceeds the length bound: " + std::to_string(path.size() - 1), false);
    for (Vertex v : path) used[v] = 1;
    result.paths.push_back(std::move(path));
  }
  result.ok = true;
  return result;
}

// Greedy fallback: sequential BFS shortest paths, each avoiding everything
// already used.
inline ShortPathsResult greedy_disjoint_paths(const SimpleGraph& g,
                                              const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                              const std::vector<char>& forbidden) {
  const int n = g.n();
  const double cap = short_path_length_cap(n);
  std::vector<char> used = forbidden;
  for (const auto& [a, b] : pairs) used[a] = used[b] = 1;

  ShortPathsResult result;
  result.used_fallback = true;
  std::vector<Vertex> parent(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<Vertex> queue{a};
    parent[a] = a;
    bool found = false;
    while (!queue.empty() && !found) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (parent[w] >= 0) continue;
        if (w == b) {
          parent[w] = v;
          found = true;
          break;
        }
        if (used[w]) continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    if (!found)
      return ShortPathsResult::failure(i, std::nullopt, "no path available", true);
    std::vector<Vertex> path{b};
    for (Vertex cur = b; cur != a;) {
      cur = parent[cur];
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    if (static_cast<double>(path.size()) - 1.0 > cap)
      return ShortPathsResult::failure(
          i, std::nullopt,
          "path exceeds the length bound: " + std::to_string(path.size() - 1), true);
    for (Vertex v : path) used[v] = 1;
    result.paths.push_back(std::move(path));
  }
  result.ok = true;
  return result;
}

}  // namespace detail

inline ShortPathsResult find_short_disjoint_paths(
    const SimpleGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs,
    const std::vector<Vertex>& forbidden, const HalfExpanderParams& params) {
  params.validate();
  const int n = g.n();
  if (pairs.size() > std::max(1.0, std::log(n)))
    throw std::invalid_argument("find_short_disjoint_paths: more than ln n pairs");

  std::vector<char> blocked(n, 0);
  for (Vertex v : forbidden) blocked[v] = 1;
  std::vector<char> endpoint_seen(n, 0);
  for (const auto& [a, b] : pairs) {
    for (Vertex v : {a, b}) {
      if (v < 0 || v >= n) throw std::invalid_argument("endpoint out of range");
      if (blocked[v]) throw std::invalid_argument("endpoint inside the forbidden set");
      if (endpoint_seen[v]) throw std::invalid_argument("endpoints are not distinct");
      endpoint_seen[v] = 1;
    }
  }
  if (pairs.empty()) {
    ShortPathsResult r;
    r.ok = true;
    return r;
  }

  const double q = params.r / (8.0 * std::log(n));
  if (q > 1.0) return detail::layered_disjoint_paths(g, pairs, blocked, params, q);
  return detail::greedy_disjoint_paths(g, pairs, blocked);
}

}  // namespace mbg
