// Simple undirected graph on vertices 0..n-1 with edges addressed by EdgeId.
// A throwaway view type: analyses build one per snapshot, mutate it while
// constructing, then treat it as read-only.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mbg/edge_index.hpp"

namespace mbg {

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    present_.assign(edge_count(n), false);
  }

  int n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(EdgeId e) const { return present_[e]; }
  bool has_edge(Vertex u, Vertex v) const { return present_[edge_index(u, v, n_)]; }

  void add_edge(Vertex u, Vertex v) { add_edge(edge_index(u, v, n_)); }

  void add_edge(EdgeId e) {
    if (present_[e]) throw std::invalid_argument("SimpleGraph: duplicate edge");
    present_[e] = true;
    edges_.push_back(e);
    const auto [u, v] = edge_endpoints(e, n_);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

 private:
  int n_ = 0;
  std::vector<bool> present_;
  std::vector<EdgeId> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Component id per vertex; ids are 0-based in order of first appearance.
inline std::vector<int> connected_components(const SimpleGraph& g) {
  const int n = g.n();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline int component_count(const SimpleGraph& g) {
  const auto comp = connected_components(g);
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

inline bool is_connected(const SimpleGraph& g) {
  return g.n() <= 1 || component_count(g) == 1;
}

inline int min_degree(const SimpleGraph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) best = (v == 0) ? g.degree(v) : std::min(best, g.degree(v));
  return g.n() == 0 ? 0 : best;
}

}  // namespace mbg
