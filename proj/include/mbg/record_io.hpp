// GameRecord file format: header "game n a b seed stop_round", then one line
// per move "<ordinal> <u> <v> <M|B>", ASCII decimal, 1-based ordinals.
#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mbg/game.hpp"

namespace mbg {

inline void write_record(std::ostream& out, const GameRecord& rec) {
  out << "game " << rec.config.n << " " << rec.config.a << " " << rec.config.b << " "
      << rec.seed << " " << rec.stop_round << "\n";
  std::size_t ordinal = 1;
  for (const Move& m : rec.play_sequence) {
    const auto [u, v] = edge_endpoints(m.edge, rec.config.n);
    out << ordinal++ << " " << u << " " << v << " "
        << (m.owner == Owner::Maker ? 'M' : 'B') << "\n";
  }
}

inline GameRecord read_record(std::istream& in) {
  std::string tag;
  GameRecord rec;
  if (!(in >> tag >> rec.config.n >> rec.config.a >> rec.config.b >> rec.seed >>
        rec.stop_round) ||
      tag != "game")
    throw std::invalid_argument("record: expected header 'game n a b seed stop_round'");
  std::size_t ordinal;
  int u, v;
  char owner;
  while (in >> ordinal >> u >> v >> owner) {
    if (ordinal != rec.play_sequence.size() + 1)
      throw std::invalid_argument("record: ordinals must be consecutive from 1");
    if (owner != 'M' && owner != 'B')
      throw std::invalid_argument("record: move owner must be M or B");
    rec.play_sequence.push_back(
        {edge_index(u, v, rec.config.n), owner == 'M' ? Owner::Maker : Owner::Breaker});
  }
  // A file carries no strategy metadata; Maker's pick order still serves as
  // a permutation prefix, which analyses flag as such.
  rec.sigma_kind = SigmaKind::InducedPrefix;
  return rec;
}

inline std::string record_to_string(const GameRecord& rec) {
  std::ostringstream out;
  write_record(out, rec);
  return out.str();
}

}  // namespace mbg
