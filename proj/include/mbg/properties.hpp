// Exact target-property decisions: minimum degree, connectivity,
// k-connectivity (Menger via unit-capacity flow), Hamiltonicity and Hamilton
// connectivity (subset DP up to 20 vertices, pruned backtracking above when
// requested).
#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbg/graph.hpp"

namespace mbg {

class UnsupportedSizeError : public std::runtime_error {
 public:
  explicit UnsupportedSizeError(const std::string& what) : std::runtime_error(what) {}
};

enum class PropertyKind { MinDegree, Connected, KConnected, Hamiltonian, HamiltonConnected };

struct PropertyId {
  PropertyKind kind = PropertyKind::Connected;
  int k = 1;  // parameter of MinDegree / KConnected

  static PropertyId min_degree(int k) { return {PropertyKind::MinDegree, k}; }
  static PropertyId connected() { return {PropertyKind::Connected, 1}; }
  static PropertyId k_connected(int k) { return {PropertyKind::KConnected, k}; }
  static PropertyId hamiltonian() { return {PropertyKind::Hamiltonian, 1}; }
  static PropertyId hamilton_connected() { return {PropertyKind::HamiltonConnected, 1}; }

  std::string to_string() const {
    switch (kind) {
      case PropertyKind::MinDegree: return "min_degree:" + std::to_string(k);
      case PropertyKind::Connected: return "connected";
      case PropertyKind::KConnected: return "k_connected:" + std::to_string(k);
      case PropertyKind::Hamiltonian: return "hamiltonian";
      case PropertyKind::HamiltonConnected: return "hamilton_connected";
    }
    return "?";
  }

  static PropertyId parse(const std::string& text) {
    auto starts = [&](const char* p) { return text.rfind(p, 0) == 0; };
    if (text == "connected") return connected();
    if (text == "hamiltonian") return hamiltonian();
    if (text == "hamilton_connected") return hamilton_connected();
    if (starts("min_degree:")) {
      const int k = std::stoi(text.substr(11));
      if (k < 1) throw std::invalid_argument("min_degree parameter must be >= 1");
      return min_degree(k);
    }
    if (starts("k_connected:")) {
      const int k = std::stoi(text.substr(12));
      if (k < 1) throw std::invalid_argument("k_connected parameter must be >= 1");
      return k_connected(k);
    }
    throw std::invalid_argument("unknown property: " + text);
  }
};

constexpr int kHamiltonExactLimit = 20;

enum class HamiltonMode { ExactOnly, Backtracking };

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= (1u << w);
  return adj;
}

// Subset DP: reach[mask] = endpoint set of paths that start at `start` and
// visit exactly `mask`.
inline std::vector<std::uint32_t> path_dp(const std::vector<std::uint32_t>& adj, int n,
                                          int start) {
  std::vector<std::uint32_t> reach(std::size_t(1) << n, 0);
  reach[1u << start] = 1u << start;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends || !(mask & (1u << start))) continue;
    std::uint32_t frontier = 0;
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      frontier |= adj[v] & ~mask;
    }
    while (frontier) {
      const int w = std::countr_zero(frontier);
      frontier &= frontier - 1;
      reach[mask | (1u << w)] |= 1u << w;
    }
  }
  return reach;
}

inline bool hamilton_cycle_dp(const SimpleGraph& g) {
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  const auto reach = path_dp(adj, n, 0);
  const std::uint32_t full = (1u << n) - 1;
  return (reach[full] & adj[0]) != 0;
}

inline bool hamilton_path_dp(const SimpleGraph& g, Vertex s, Vertex t) {
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  const auto reach = path_dp(adj, n, s);
  const std::uint32_t full = (1u << n) - 1;
  return (reach[full] & (1u << t)) != 0;
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  bool expired() const { return std::chrono::steady_clock::now() > end_; }

 private:
  std::chrono::steady_clock::time_point end_;
};

// Backtracking Hamilton search with degree-ordered branching and a
// reachability prune. Finds a cycle (target < 0) or an s-t path. Appends the
// vertex order to `out` when found.
class HamiltonSearch {
 public:
  HamiltonSearch(const SimpleGraph& g, double budget_seconds)
      : g_(g), n_(g.n()), deadline_(budget_seconds) {
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      order_[v] = g.neighbors(v);
      std::sort(order_[v].begin(), order_[v].end(),
                [&](Vertex x, Vertex y) { return g.degree(x) < g.degree(y); });
    }
  }

  bool cycle(std::vector<Vertex>& out) {
    if (n_ < 3) return false;
    visited_.assign(n_, false);
    path_.clear();
    visited_[0] = true;
    path_.push_back(0);
    return extend(0, /*target=*/-1) && (out = path_, true);
  }

  bool path(Vertex s, Vertex t, std::vector<Vertex>& out) {
    if (n_ == 1) {
      if (s == t) {
        out = {s};
        return true;
      }
      return false;
    }
    if (s == t) return false;
    visited_.assign(n_, false);
    path_.clear();
    visited_[s] = true;
    path_.push_back(s);
    return extend(s, t) && (out = path_, true);
  }

 private:
  bool extend(Vertex cur, Vertex target) {
    if (static_cast<int>(path_.size()) == n_) {
      if (target < 0) return g_.has_edge(path_.back(), path_.front());
      return path_.back() == target;
    }
    if (++ticks_ % 1024 == 0 && deadline_.expired())
      throw UnsupportedSizeError("hamilton search: budget exhausted");
    if (!reachable_prune(cur, target)) return false;
    for (Vertex w : order_[cur]) {
      if (visited_[w]) continue;
      if (w == target && static_cast<int>(path_.size()) != n_ - 1) continue;
      visited_[w] = true;
      path_.push_back(w);
      if (extend(w, target)) return true;
      path_.pop_back();
      visited_[w] = false;
    }
    return false;
  }

  // Every unvisited vertex must stay reachable from the current endpoint
  // through unvisited vertices.
  bool reachable_prune(Vertex cur, Vertex target) {
    seen_.assign(n_, false);
    queue_.clear();
    seen_[cur] = true;
    queue_.push_back(cur);
    int found = 0;
    const int unvisited = n_ - static_cast<int>(path_.size());
    while (!queue_.empty()) {
      const Vertex v = queue_.front();
      queue_.pop_front();
      for (Vertex w : g_.neighbors(v)) {
        if (seen_[w] || visited_[w]) continue;
        seen_[w] = true;
        ++found;
        queue_.push_back(w);
      }
    }
    if (found != unvisited) return false;
    if (target >= 0 && !seen_[target] && cur != target) return false;
    return true;
  }

  const SimpleGraph& g_;
  int n_;
  Deadline deadline_;
  std::vector<std::vector<Vertex>> order_;
  std::vector<bool> visited_;
  std::vector<bool> seen_;
  std::deque<Vertex> queue_;
  std::vector<Vertex> path_;
  std::uint64_t ticks_ = 0;
};

// Internally vertex-disjoint s-t paths via unit vertex capacities, stopping
// once `need` augmenting paths are found.
inline int disjoint_path_count(const SimpleGraph& g, Vertex s, Vertex t, int need) {
  const int n = g.n();
  // Node 2v = in, 2v+1 = out. Arc list with residual capacities.
  struct Arc {
    int to, rev;
    int cap;
  };
  std::vector<std::vector<Arc>> net(2 * n);
  auto add_arc = [&](int from, int to, int cap) {
    net[from].push_back({to, static_cast<int>(net[to].size()), cap});
    net[to].push_back({from, static_cast<int>(net[from].size()) - 1, 0});
  };
  for (Vertex v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? need : 1);
  for (EdgeId e : g.edges()) {
    const auto [u, v] = edge_endpoints(e, n);
    add_arc(2 * u + 1, 2 * v, 1);
    add_arc(2 * v + 1, 2 * u, 1);
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  std::vector<std::pair<int, int>> parent(2 * n);  // (node, arc index)
  while (flow < need) {
    std::fill(parent.begin(), parent.end(), std::make_pair(-1, -1));
    parent[source] = {source, -1};
    std::deque<int> q{source};
    while (!q.empty() && parent[sink].first < 0) {
      const int v = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < net[v].size(); ++i) {
        const Arc& a = net[v][i];
        if (a.cap > 0 && parent[a.to].first < 0) {
          parent[a.to] = {v, static_cast<int>(i)};
          q.push_back(a.to);
        }
      }
    }
    if (parent[sink].first < 0) break;
    for (int v = sink; v != source;) {
      const auto [pv, pi] = parent[v];
      net[pv][pi].cap -= 1;
      net[v][net[pv][pi].rev].cap += 1;
      v = pv;
    }
    ++flow;
  }
  return flow;
}

inline bool k_connected(const SimpleGraph& g, int k) {
  const int n = g.n();
  if (n <= k) return false;  // needs more than k vertices
  if (min_degree(g) < k) return false;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t)
      if (disjoint_path_count(g, s, t, k) < k) return false;
  return true;
}

}  // namespace detail

inline bool is_hamiltonian(const SimpleGraph& g, HamiltonMode mode = HamiltonMode::ExactOnly,
                           double budget_seconds = 10.0) {
  if (g.n() < 3) return false;
  if (g.n() <= kHamiltonExactLimit) return detail::hamilton_cycle_dp(g);
  if (mode == HamiltonMode::ExactOnly)
    throw UnsupportedSizeError("hamiltonian: n exceeds the exact limit; "
                               "request backtracking mode");
  detail::HamiltonSearch search(g, budget_seconds);
  std::vector<Vertex> cycle;
  return search.cycle(cycle);
}

inline bool has_hamilton_path(const SimpleGraph& g, Vertex s, Vertex t,
                              HamiltonMode mode = HamiltonMode::ExactOnly,
                              double budget_seconds = 10.0) {
  if (g.n() <= kHamiltonExactLimit) return detail::hamilton_path_dp(g, s, t);
  if (mode == HamiltonMode::ExactOnly)
    throw UnsupportedSizeError("hamilton path: n exceeds the exact limit; "
                               "request backtracking mode");
  detail::HamiltonSearch search(g, budget_seconds);
  std::vector<Vertex> path;
  return search.path(s, t, path);
}

inline bool is_hamilton_connected(const SimpleGraph& g,
                                  HamiltonMode mode = HamiltonMode::ExactOnly,
                                  double budget_seconds = 10.0) {
  const int n = g.n();
  if (n < 2) return false;
  if (n <= kHamiltonExactLimit) {
    const auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = (1u << n) - 1;
    for (Vertex s = 0; s < n; ++s) {
      const auto reach = detail::path_dp(adj, n, s);
      // Every other vertex must be a reachable endpoint of a full path.
      if ((reach[full] | (1u << s)) != full) return false;
    }
    return true;
  }
  if (mode == HamiltonMode::ExactOnly)
    throw UnsupportedSizeError("hamilton_connected: n exceeds the exact limit; "
                               "request backtracking mode");
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t)
      if (!has_hamilton_path(g, s, t, mode, budget_seconds)) return false;
  return true;
}

inline bool check_property(const SimpleGraph& g, const PropertyId& p,
                           HamiltonMode mode = HamiltonMode::ExactOnly,
                           double budget_seconds = 10.0) {
  switch (p.kind) {
    case PropertyKind::MinDegree: return min_degree(g) >= p.k;
    case PropertyKind::Connected: return is_connected(g);
    case PropertyKind::KConnected: return detail::k_connected(g, p.k);
    case PropertyKind::Hamiltonian: return is_hamiltonian(g, mode, budget_seconds);
    case PropertyKind::HamiltonConnected: return is_hamilton_connected(g, mode, budget_seconds);
  }
  return false;
}

}  // namespace mbg
