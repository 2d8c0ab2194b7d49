// Constructive Hamilton-cycle pipeline on a recorded game: cover the bad
// vertices with saviour paths, splice the cover into one long path with
// short disjoint connectors through good vertices, search a Hamilton path
// over the rest of Maker's graph between the long path's endpoints, and
// close the cycle. Every stage can fail with a structured report; returned
// cycles always pass the independent verifier.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mbg/game.hpp"
#include "mbg/properties.hpp"
#include "mbg/short_paths.hpp"
#include "mbg/structure.hpp"

namespace mbg {

constexpr int kAssemblySizeLimit = 80;

struct AssemblyResult {
  enum class Stage { Classify, Cover, Connect, HamiltonPath, Verify, Done };

  bool ok = false;
  Stage stage = Stage::Done;  // the failing stage when !ok
  std::string message;
  std::vector<Vertex> cycle;
  std::size_t cover_paths = 0;
  std::size_t bad_vertices = 0;
  bool used_fallback_paths = false;

  static AssemblyResult failure(Stage s, std::string msg) {
    AssemblyResult r;
    r.stage = s;
    r.message = std::move(msg);
    return r;
  }
};

inline const char* to_string(AssemblyResult::Stage s) {
  switch (s) {
    case AssemblyResult::Stage::Classify: return "classify";
    case AssemblyResult::Stage::Cover: return "cover";
    case AssemblyResult::Stage::Connect: return "connect";
    case AssemblyResult::Stage::HamiltonPath: return "hamilton_path";
    case AssemblyResult::Stage::Verify: return "verify";
    case AssemblyResult::Stage::Done: return "done";
  }
  return "?";
}

// Cyclic visit of every vertex exactly once with every step a graph edge.
inline bool verify_hamilton_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  const int n = g.n();
  if (static_cast<int>(cycle.size()) != n || n < 3) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

inline AssemblyResult assemble_hamilton_cycle(const GameRecord& rec,
                                              const AnalysisParams& params,
                                              double budget_seconds = 30.0) {
  using Stage = AssemblyResult::Stage;
  const int n = rec.config.n;
  if (n > kAssemblySizeLimit)
    throw UnsupportedSizeError("assemble_hamilton_cycle: n exceeds " +
                               std::to_string(kAssemblySizeLimit));

  bool clamped = false;
  const int t = detail::clamped_horizon(rec, params, clamped);
  const SimpleGraph maker = maker_graph_at(rec, t);

  // Stage 1: classification, saviour digraph with k = 2, path cover.
  const auto cls = classify_vertices(rec, params);
  AnalysisParams cover_params = params;
  cover_params.k = 2;
  const auto digraph = build_saviour_digraph(rec, cover_params);
  const auto cover = extract_path_cover(digraph, cls);
  if (!cover.ok)
    return AssemblyResult::failure(
        Stage::Cover, cover.message + " (vertex " +
                          std::to_string(cover.deficient_vertex.value_or(-1)) + ")");

  AssemblyResult result;
  result.cover_paths = cover.cover.paths.size();
  result.bad_vertices = cls.bad.size();

  std::vector<Vertex> long_path;
  if (!cover.cover.paths.empty()) {
    // Stage 2: connect consecutive cover paths b_i ~> a_{i+1} inside the
    // good part of Maker's graph.
    const auto& qs = cover.cover.paths;
    std::vector<char> in_cover(n, 0);
    for (const auto& q : qs)
      for (Vertex v : q) in_cover[v] = 1;

    std::vector<std::pair<Vertex, Vertex>> connector_pairs;
    for (std::size_t i = 0; i + 1 < qs.size(); ++i)
      connector_pairs.emplace_back(qs[i].back(), qs[i + 1].front());

    std::vector<Vertex> forbidden;
    for (Vertex v = 0; v < n; ++v) {
      bool is_connector_endpoint = false;
      for (const auto& [x, y] : connector_pairs)
        is_connector_endpoint |= (v == x || v == y);
      if (in_cover[v] && !is_connector_endpoint) forbidden.push_back(v);
    }

    std::vector<std::vector<Vertex>> connectors;
    if (!connector_pairs.empty()) {
      if (static_cast<double>(connector_pairs.size()) > std::max(1.0, std::log(n)))
        return AssemblyResult::failure(Stage::Connect, "more cover paths than ln n");
      // The expansion parameters follow the random-graph shape of Maker's
      // board; at these sizes the constructor typically lands in its BFS
      // fallback, which the result records.
      HalfExpanderParams hx;
      hx.lambda = 0.25;
      hx.r = std::max(0.1, static_cast<double>(maker.num_edges()) / (16.0 * n));
      const auto paths = find_short_disjoint_paths(maker, connector_pairs, forbidden, hx);
      result.used_fallback_paths = paths.used_fallback;
      if (!paths.ok)
        return AssemblyResult::failure(Stage::Connect, paths.message);
      connectors = paths.paths;
    }

    long_path = qs.front();
    for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
      const auto& bridge = connectors[i];
      long_path.insert(long_path.end(), bridge.begin() + 1, bridge.end());
      long_path.insert(long_path.end(), qs[i + 1].begin() + 1, qs[i + 1].end());
    }
  }

  // Stage 3: Hamilton path (or cycle, when no bad vertices anchor a path)
  // on Maker's graph minus the long path's interior.
  std::vector<Vertex> closing;
  if (long_path.empty()) {
    try {
      detail::HamiltonSearch search(maker, budget_seconds);
      if (!search.cycle(closing))
        return AssemblyResult::failure(Stage::HamiltonPath,
                                       "no hamilton cycle in Maker's graph");
    } catch (const UnsupportedSizeError& ex) {
      return AssemblyResult::failure(Stage::HamiltonPath, ex.what());
    }
    result.cycle = closing;
  } else {
    const Vertex front = long_path.front(), back = long_path.back();
    std::vector<char> interior(n, 0);
    for (Vertex v : long_path) interior[v] = 1;
    interior[front] = interior[back] = 0;

    std::vector<Vertex> to_sub(n, -1), from_sub;
    for (Vertex v = 0; v < n; ++v)
      if (!interior[v]) {
        to_sub[v] = static_cast<Vertex>(from_sub.size());
        from_sub.push_back(v);
      }
    SimpleGraph sub(static_cast<int>(from_sub.size()));
    for (EdgeId e : maker.edges()) {
      const auto [u, v] = edge_endpoints(e, n);
      if (to_sub[u] >= 0 && to_sub[v] >= 0)
        sub.add_edge(std::min(to_sub[u], to_sub[v]), std::max(to_sub[u], to_sub[v]));
    }

    std::vector<Vertex> sub_path;
    try {
      detail::HamiltonSearch search(sub, budget_seconds);
      if (!search.path(to_sub[front], to_sub[back], sub_path))
        return AssemblyResult::failure(Stage::HamiltonPath,
                                       "no hamilton path over the remainder");
    } catch (const UnsupportedSizeError& ex) {
      return AssemblyResult::failure(Stage::HamiltonPath, ex.what());
    }

    // Close the loop: remainder path front..back, then the long path walked
    // back from back to front, interior only.
    result.cycle.clear();
    for (Vertex v : sub_path) result.cycle.push_back(from_sub[v]);
    for (std::size_t i = long_path.size() - 1; i > 0; --i)
      if (i != long_path.size() - 1) result.cycle.push_back(long_path[i]);
  }

  if (!verify_hamilton_cycle(maker, result.cycle))
    return AssemblyResult::failure(Stage::Verify, "assembled cycle failed verification");
  result.ok = true;
  result.stage = Stage::Done;
  return result;
}

}  // namespace mbg
