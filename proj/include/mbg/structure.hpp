// Structural analysis of recorded games: Breaker-degree classification with
// candidate events, the saviour digraph built by the two arc rules, path
// covers of bad vertices, the blocked graph H over a permutation prefix, and
// the Maker-containment audit.
//
// Round horizon t = ceil((alpha/2) n ln n). A vertex is bad when Breaker's
// degree at it reaches 3*alpha*n by round t, an early candidate when the
// alpha*n-th incident Breaker edge lands strictly before round t-(1-alpha)n,
// and a late candidate when the 2*alpha*n-th lands in
// [t-(1-alpha)n, t-alpha*n].
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mbg/game.hpp"
#include "mbg/graph.hpp"

namespace mbg {

class UnsupportedRecordError : public std::runtime_error {
 public:
  explicit UnsupportedRecordError(const std::string& what) : std::runtime_error(what) {}
};

struct AnalysisParams {
  double alpha = 0.1;
  int t = 1;  // horizon round
  int k = 2;  // saviour out-degree target

  static int horizon_for(double alpha, int n) {
    return std::max(1, static_cast<int>(std::ceil(alpha / 2.0 * n * std::log(n))));
  }

  static AnalysisParams for_board(double alpha, int n, int k = 2) {
    if (!(alpha > 0.0 && alpha < 0.5))
      throw std::invalid_argument("AnalysisParams: alpha must lie in (0, 1/2)");
    if (k < 1) throw std::invalid_argument("AnalysisParams: k must be positive");
    return {alpha, horizon_for(alpha, n), k};
  }
};

// (1+eps)(1-3a)^2 > 1+eps/2, the smallness condition tying alpha to eps.
inline bool alpha_admissible(double alpha, double eps) {
  const double lhs = (1.0 + eps) * (1.0 - 3.0 * alpha) * (1.0 - 3.0 * alpha);
  return alpha > 0.0 && alpha < 0.5 && lhs > 1.0 + eps / 2.0;
}

struct CandidateEvent {
  enum class Kind { Early, Late };
  Kind kind;
  int round;
};

struct VertexClassification {
  int horizon = 0;  // the round actually analysed
  bool horizon_clamped = false;
  double bad_threshold = 0.0;  // 3 alpha n
  double bad_bound = 0.0;      // 2t / (3 alpha n)
  std::vector<int> breaker_degree;
  std::vector<char> is_bad;
  std::vector<Vertex> bad;  // ascending
  std::vector<std::optional<CandidateEvent>> candidate_events;

  bool is_candidate(Vertex v) const { return candidate_events[v].has_value(); }
};

namespace detail {

inline int clamped_horizon(const GameRecord& rec, const AnalysisParams& params,
                           bool& clamped) {
  clamped = rec.stop_round < params.t;
  return std::min(params.t, rec.stop_round);
}

}  // namespace detail

inline VertexClassification classify_vertices(const GameRecord& rec,
                                              const AnalysisParams& params) {
  const int n = rec.config.n;
  VertexClassification cls;
  cls.horizon = detail::clamped_horizon(rec, params, cls.horizon_clamped);
  const int t = cls.horizon;
  cls.bad_threshold = 3.0 * params.alpha * n;
  cls.bad_bound = 2.0 * t / (3.0 * params.alpha * n);
  cls.breaker_degree.assign(n, 0);
  cls.candidate_events.assign(n, std::nullopt);

  const double alpha_n = params.alpha * n;
  const double early_before = t - (1.0 - params.alpha) * n;  // strict
  const double late_lo = early_before;
  const double late_hi = t - alpha_n;

  std::vector<int> alpha_round(n, -1), two_alpha_round(n, -1);
  walk_play_sequence(rec, [&](const Move& m, int round) {
    if (round > t || m.owner != Owner::Breaker) return;
    const auto [u, v] = edge_endpoints(m.edge, n);
    for (Vertex w : {u, v}) {
      const int deg = ++cls.breaker_degree[w];
      if (alpha_round[w] < 0 && deg >= alpha_n) alpha_round[w] = round;
      if (two_alpha_round[w] < 0 && deg >= 2.0 * alpha_n) two_alpha_round[w] = round;
    }
  });

  cls.is_bad.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (cls.breaker_degree[v] >= cls.bad_threshold) {
      cls.is_bad[v] = 1;
      cls.bad.push_back(v);
    }
    if (alpha_round[v] >= 0 && alpha_round[v] < early_before)
      cls.candidate_events[v] = CandidateEvent{CandidateEvent::Kind::Early, alpha_round[v]};
    else if (two_alpha_round[v] >= 0 && two_alpha_round[v] >= late_lo &&
             two_alpha_round[v] <= late_hi)
      cls.candidate_events[v] = CandidateEvent{CandidateEvent::Kind::Late, two_alpha_round[v]};
  }
  return cls;
}

struct SaviourDigraph {
  int n = 0;
  int k = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::vector<int> out_degree, in_degree;
  std::vector<int> candidate_round;  // -1 when the vertex never turned candidate

  bool has_arc(Vertex u, Vertex v) const {
    return std::find(arcs.begin(), arcs.end(), std::make_pair(u, v)) != arcs.end();
  }
};

// Replays the game through round t, firing rule (1) on every candidacy event
// (up to k arcs over Maker edges claimed so far, smallest endpoint first)
// and rule (2) on every Maker edge out of a candidate. Maker's moves within
// a turn are processed in play-sequence order.
inline SaviourDigraph build_saviour_digraph(const GameRecord& rec,
                                            const AnalysisParams& params) {
  const int n = rec.config.n;
  bool clamped = false;
  const int t = detail::clamped_horizon(rec, params, clamped);
  const int k = params.k;

  SaviourDigraph d;
  d.n = n;
  d.k = k;
  d.out_degree.assign(n, 0);
  d.in_degree.assign(n, 0);
  d.candidate_round.assign(n, -1);

  const double alpha_n = params.alpha * n;
  const double early_before = t - (1.0 - params.alpha) * n;
  const double late_hi = t - alpha_n;

  std::vector<int> bdeg(n, 0);
  std::vector<char> cand(n, 0);
  std::vector<std::vector<Vertex>> maker_adj(n);

  auto add_arc = [&](Vertex u, Vertex v) {
    d.arcs.emplace_back(u, v);
    ++d.out_degree[u];
    ++d.in_degree[v];
  };

  // Rule (1): a fresh candidate picks up to k saviour arcs over Maker edges
  // already on the board.
  auto rule_one = [&](Vertex u) {
    std::vector<Vertex> eligible;
    for (Vertex v : maker_adj[u])
      if (!cand[v] && d.in_degree[v] == 0) eligible.push_back(v);
    std::sort(eligible.begin(), eligible.end());
    for (std::size_t i = 0; i < eligible.size() && d.out_degree[u] < k; ++i)
      add_arc(u, eligible[i]);
  };

  walk_play_sequence(rec, [&](const Move& m, int round) {
    if (round > t) return;
    const auto [u, v] = edge_endpoints(m.edge, n);
    if (m.owner == Owner::Breaker) {
      // Mark both endpoints' candidacy before firing rule (1) so that two
      // vertices crossing a threshold on the same edge never become each
      // other's saviours.
      Vertex fresh[2];
      int fresh_count = 0;
      for (Vertex w : {u, v}) {
        const int deg = ++bdeg[w];
        if (cand[w]) continue;
        const bool early = deg - 1 < alpha_n && deg >= alpha_n && round < early_before;
        const bool late = deg - 1 < 2.0 * alpha_n && deg >= 2.0 * alpha_n &&
                          round >= early_before && round <= late_hi;
        if (early || late) {
          cand[w] = 1;
          d.candidate_round[w] = round;
          fresh[fresh_count++] = w;
        }
      }
      if (fresh_count == 2 && fresh[0] > fresh[1]) std::swap(fresh[0], fresh[1]);
      for (int i = 0; i < fresh_count; ++i) rule_one(fresh[i]);
    } else {
      maker_adj[u].push_back(v);
      maker_adj[v].push_back(u);
      // Rule (2): at most one orientation can qualify.
      if (cand[u] && !cand[v] && d.out_degree[u] < k && d.in_degree[v] == 0)
        add_arc(u, v);
      else if (cand[v] && !cand[u] && d.out_degree[v] < k && d.in_degree[u] == 0)
        add_arc(v, u);
    }
  });
  return d;
}

struct DigraphAudit {
  bool ok = true;
  std::string violation;
  std::optional<std::pair<Vertex, Vertex>> witness_arc;
  std::optional<Vertex> witness_vertex;

  static DigraphAudit fail(std::string what, std::optional<std::pair<Vertex, Vertex>> arc,
                           std::optional<Vertex> vertex = std::nullopt) {
    return {false, std::move(what), arc, vertex};
  }
};

// Re-derives all four digraph invariants from the arc list alone: in-degrees
// at most one, out-degrees at most k, acyclic underlying graph, and every
// arc an edge of Maker's graph.
inline DigraphAudit verify_digraph_invariants(const SaviourDigraph& d,
                                              const SimpleGraph& maker_graph) {
  std::vector<int> indeg(d.n, 0), outdeg(d.n, 0);
  for (const auto& [u, v] : d.arcs) {
    if (++indeg[v] > 1) return DigraphAudit::fail("in-degree exceeds 1", {{u, v}}, v);
    if (++outdeg[u] > d.k) return DigraphAudit::fail("out-degree exceeds k", {{u, v}}, u);
    if (u == v || !maker_graph.has_edge(std::min(u, v), std::max(u, v)))
      return DigraphAudit::fail("arc is not a Maker edge", {{u, v}});
  }
  // Union-find over the underlying undirected edges detects a cycle as a
  // merge of an already-joined pair.
  std::vector<int> parent(d.n);
  for (int i = 0; i < d.n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : d.arcs) {
    const int ru = find(u), rv = find(v);
    if (ru == rv) return DigraphAudit::fail("underlying graph has a cycle", {{u, v}});
    parent[ru] = rv;
  }
  return {};
}

struct PathCover {
  std::vector<std::vector<Vertex>> paths;
};

struct PathCoverResult {
  bool ok = true;
  PathCover cover;
  std::optional<Vertex> deficient_vertex;
  std::string message;
};

// Peels paths off D_2: take the smallest in-degree-0 bad vertex, follow its
// two out-arcs through bad vertices to good endpoints, emit the combined
// path, delete it, repeat. Requires out-degree exactly 2 on every bad
// vertex.
inline PathCoverResult extract_path_cover(const SaviourDigraph& d,
                                          const VertexClassification& cls) {
  if (d.k != 2)
    throw std::invalid_argument("extract_path_cover: built for k = 2 digraphs");
  PathCoverResult result;
  for (Vertex v : cls.bad)
    if (d.out_degree[v] != 2) {
      result.ok = false;
      result.deficient_vertex = v;
      result.message = "bad vertex lacks out-degree 2";
      return result;
    }

  const int n = d.n;
  std::vector<std::vector<Vertex>> out(n);
  for (const auto& [u, v] : d.arcs) out[u].push_back(v);
  for (auto& list : out) std::sort(list.begin(), list.end());
  std::vector<char> alive(n, 1);

  auto alive_out = [&](Vertex u) {
    std::vector<Vertex> live;
    for (Vertex v : out[u])
      if (alive[v]) live.push_back(v);
    return live;
  };

  std::vector<Vertex> remaining_bad = cls.bad;
  while (!remaining_bad.empty()) {
    // In-degrees among alive vertices.
    std::vector<int> indeg(n, 0);
    for (const auto& [u, v] : d.arcs)
      if (alive[u] && alive[v]) ++indeg[v];
    Vertex root = -1;
    for (Vertex v : remaining_bad)
      if (indeg[v] == 0) {
        root = v;
        break;
      }
    if (root < 0) {
      result.ok = false;
      result.deficient_vertex = remaining_bad.front();
      result.message = "no in-degree-0 bad vertex available";
      return result;
    }

    auto walk = [&](Vertex first) -> std::optional<std::vector<Vertex>> {
      std::vector<Vertex> chain{first};
      Vertex cur = first;
      while (cls.is_bad[cur]) {
        const auto next = alive_out(cur);
        if (next.empty()) return std::nullopt;
        cur = next.front();
        chain.push_back(cur);
      }
      return chain;
    };

    const auto roots_arcs = alive_out(root);
    if (roots_arcs.size() < 2) {
      result.ok = false;
      result.deficient_vertex = root;
      result.message = "bad vertex lost an out-arc during extraction";
      return result;
    }
    const auto right = walk(roots_arcs[0]);
    const auto left = walk(roots_arcs[1]);
    if (!right || !left) {
      result.ok = false;
      result.deficient_vertex = root;
      result.message = "walk starved before reaching a good vertex";
      return result;
    }
    std::vector<Vertex> path(left->rbegin(), left->rend());
    path.push_back(root);
    path.insert(path.end(), right->begin(), right->end());
    for (Vertex v : path) alive[v] = 0;
    result.cover.paths.push_back(std::move(path));
    std::erase_if(remaining_bad, [&](Vertex v) { return !alive[v]; });
  }
  return result;
}

struct BlockedGraph {
  std::vector<EdgeId> edges;                // the graph H
  std::vector<std::uint32_t> coordinates;   // the index set M
  SigmaKind sigma_kind = SigmaKind::None;
  int horizon = 0;
};

namespace detail {

inline const std::vector<EdgeId>& sigma_of(const GameRecord& rec, std::vector<EdgeId>& storage) {
  switch (rec.sigma_kind) {
    case SigmaKind::FullPermutation:
      return rec.sigma;
    case SigmaKind::InducedPrefix:
      storage = rec.maker_pick_order();
      return storage;
    case SigmaKind::None:
      throw UnsupportedRecordError(
          "record carries no permutation metadata; play it with a permutation "
          "or uniform Maker");
  }
  throw UnsupportedRecordError("unreachable");
}

}  // namespace detail

// H: edges at coordinates M of sigma that Breaker claimed within rounds
// 1..t as one of his first 3*alpha*n incident edges at both endpoints.
inline BlockedGraph blocked_graph(const GameRecord& rec,
                                  const std::vector<std::uint32_t>& coords,
                                  const AnalysisParams& params) {
  const int n = rec.config.n;
  bool clamped = false;
  const int t = detail::clamped_horizon(rec, params, clamped);
  std::vector<EdgeId> storage;
  const std::vector<EdgeId>& sigma = detail::sigma_of(rec, storage);
  const std::uint64_t limit = static_cast<std::uint64_t>(rec.config.a) * t;

  const double cap = 3.0 * params.alpha * n;
  std::vector<int> bcount(n, 0);
  std::unordered_map<EdgeId, bool> breaker_early;  // claimed with both ranks <= cap
  walk_play_sequence(rec, [&](const Move& m, int round) {
    if (round > t || m.owner != Owner::Breaker) return;
    const auto [u, v] = edge_endpoints(m.edge, n);
    const int ru = ++bcount[u], rv = ++bcount[v];
    breaker_early[m.edge] = (ru <= cap && rv <= cap);
  });

  BlockedGraph h;
  h.sigma_kind = rec.sigma_kind;
  h.horizon = t;
  h.coordinates = coords;
  for (std::uint32_t m : coords) {
    if (m >= limit)
      throw std::invalid_argument("blocked_graph: coordinate outside [a*t]");
    if (m >= sigma.size()) continue;  // permutation prefix shorter than a*t
    const EdgeId e = sigma[m];
    const auto it = breaker_early.find(e);
    if (it != breaker_early.end() && it->second) h.edges.push_back(e);
  }
  return h;
}

inline std::vector<std::uint32_t> full_coordinate_set(const GameRecord& rec,
                                                      const AnalysisParams& params) {
  bool clamped = false;
  const int t = detail::clamped_horizon(rec, params, clamped);
  const std::uint64_t limit = static_cast<std::uint64_t>(rec.config.a) * t;
  std::vector<std::uint32_t> coords(limit);
  std::iota(coords.begin(), coords.end(), 0u);
  return coords;
}

struct ContainmentResult {
  bool ok = true;
  std::optional<EdgeId> counterexample;
  std::size_t checked = 0;
  std::size_t blocked = 0;   // skipped as H edges
  std::size_t bad_skipped = 0;
};

// Verifies that G(M) - E(H) - B is inside Maker's graph at round t.
inline ContainmentResult maker_containment_check(const GameRecord& rec,
                                                 const std::vector<std::uint32_t>& coords,
                                                 const AnalysisParams& params) {
  const int n = rec.config.n;
  bool clamped = false;
  const int t = detail::clamped_horizon(rec, params, clamped);
  std::vector<EdgeId> storage;
  const std::vector<EdgeId>& sigma = detail::sigma_of(rec, storage);

  const auto cls = classify_vertices(rec, params);
  const BlockedGraph h = blocked_graph(rec, coords, params);
  std::vector<bool> in_h(edge_count(n), false);
  for (EdgeId e : h.edges) in_h[e] = true;

  std::vector<bool> maker_owned(edge_count(n), false);
  walk_play_sequence(rec, [&](const Move& m, int round) {
    if (round <= t && m.owner == Owner::Maker) maker_owned[m.edge] = true;
  });

  ContainmentResult result;
  for (std::uint32_t m : coords) {
    if (m >= sigma.size()) continue;
    const EdgeId e = sigma[m];
    const auto [u, v] = edge_endpoints(e, n);
    if (cls.is_bad[u] || cls.is_bad[v]) {
      ++result.bad_skipped;
      continue;
    }
    if (in_h[e]) {
      ++result.blocked;
      continue;
    }
    ++result.checked;
    if (!maker_owned[e]) {
      result.ok = false;
      result.counterexample = e;
      return result;
    }
  }
  return result;
}

}  // namespace mbg
