// Graph snapshot format: first line "n <count>", then one "u v" line per
// edge with u < v, ASCII decimal.
#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mbg/graph.hpp"

namespace mbg {

inline void write_graph_snapshot(std::ostream& out, const SimpleGraph& g) {
  out << "n " << g.n() << "\n";
  for (EdgeId e : g.edges()) {
    const auto [u, v] = edge_endpoints(e, g.n());
    out << u << " " << v << "\n";
  }
}

inline SimpleGraph read_graph_snapshot(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "n")
    throw std::invalid_argument("graph snapshot: expected header 'n <count>'");
  SimpleGraph g(n);
  int u, v;
  while (in >> u >> v) {
    if (u >= v) throw std::invalid_argument("graph snapshot: edge lines require u < v");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace mbg
