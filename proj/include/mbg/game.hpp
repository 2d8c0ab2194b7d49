// (a:b) biased Maker-Breaker game engine on K_n. Maker moves first; each turn
// claims free edges one by one, and an invalid or missing move is replaced by
// the free edge of smallest index. Records capture the full play-sequence and
// replay deterministically.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbg/edge_index.hpp"
#include "mbg/graph.hpp"
#include "mbg/properties.hpp"
#include "mbg/rng.hpp"

namespace mbg {

enum class Owner : std::uint8_t { Free = 0, Maker = 1, Breaker = 2 };

struct StopRule {
  enum class Kind { BoardExhausted, PropertyAchieved, RoundCap };
  Kind kind = Kind::BoardExhausted;
  PropertyId property;  // meaningful for PropertyAchieved

  static StopRule board_exhausted() { return {}; }
  static StopRule round_cap() { return {Kind::RoundCap, {}}; }
  static StopRule property_achieved(PropertyId p) { return {Kind::PropertyAchieved, p}; }
};

struct GameConfig {
  int n = 0;
  int a = 1;  // Maker moves per turn
  int b = 1;  // Breaker moves per turn
  std::optional<int> max_rounds;
  StopRule stop_rule = StopRule::board_exhausted();

  // a+b must fit one full round, except for the degenerate boards the Maker
  // sweeps alone in his first turn (a >= total edges).
  void validate() const {
    if (n < 2) throw std::invalid_argument("GameConfig: n must be at least 2");
    if (a < 1 || b < 1) throw std::invalid_argument("GameConfig: biases must be positive");
    const std::uint64_t total = edge_count(n);
    if (static_cast<std::uint64_t>(a) + b > total && static_cast<std::uint64_t>(a) < total)
      throw std::invalid_argument("GameConfig: a+b exceeds the board");
    if (stop_rule.kind == StopRule::Kind::RoundCap && !max_rounds)
      throw std::invalid_argument("GameConfig: round-cap stop rule needs max_rounds");
    if (max_rounds && *max_rounds < 1)
      throw std::invalid_argument("GameConfig: max_rounds must be positive");
  }
};

class GameState {
 public:
  GameState(int n, int a, int b) : n_(n), a_(a), b_(b) {
    const std::uint64_t total = edge_count(n);
    owner_.assign(total, Owner::Free);
    free_list_.resize(total);
    free_pos_.resize(total);
    for (std::uint64_t e = 0; e < total; ++e) {
      free_list_[e] = static_cast<EdgeId>(e);
      free_pos_[e] = static_cast<std::uint32_t>(e);
    }
    maker_deg_.assign(n, 0);
    breaker_deg_.assign(n, 0);
    free_deg_.assign(n, n - 1);
  }

  explicit GameState(const GameConfig& cfg) : GameState(cfg.n, cfg.a, cfg.b) {}

  int n() const { return n_; }
  int maker_bias() const { return a_; }
  int breaker_bias() const { return b_; }
  std::size_t free_count() const { return free_list_.size(); }
  std::size_t total_edges() const { return owner_.size(); }
  int rounds_completed() const { return rounds_completed_; }

  Owner owner(EdgeId e) const { return owner_[e]; }
  bool is_free(EdgeId e) const { return owner_[e] == Owner::Free; }
  int maker_degree(Vertex v) const { return maker_deg_[v]; }
  int breaker_degree(Vertex v) const { return breaker_deg_[v]; }
  int free_degree(Vertex v) const { return free_deg_[v]; }

  // Unordered dense view of the free edges; index uniformly for sampling.
  const std::vector<EdgeId>& free_edges() const { return free_list_; }

  // Smallest-index free edge. Valid only while free_count() > 0. The cursor
  // never rewinds because claimed edges never free up.
  EdgeId smallest_free_edge() const {
    while (cursor_ < owner_.size() && owner_[cursor_] != Owner::Free) ++cursor_;
    return static_cast<EdgeId>(cursor_);
  }

  void claim(EdgeId e, Owner who) {
    if (owner_[e] != Owner::Free) throw std::logic_error("claim: edge already owned");
    owner_[e] = who;
    const std::uint32_t pos = free_pos_[e];
    const EdgeId last = free_list_.back();
    free_list_[pos] = last;
    free_pos_[last] = pos;
    free_list_.pop_back();
    const auto [u, v] = edge_endpoints(e, n_);
    --free_deg_[u];
    --free_deg_[v];
    auto& deg = (who == Owner::Maker) ? maker_deg_ : breaker_deg_;
    ++deg[u];
    ++deg[v];
  }

  void finish_round() { ++rounds_completed_; }

  SimpleGraph graph_of(Owner who) const {
    SimpleGraph g(n_);
    for (std::uint64_t e = 0; e < owner_.size(); ++e)
      if (owner_[e] == who) g.add_edge(static_cast<EdgeId>(e));
    return g;
  }

 private:
  int n_, a_, b_;
  int rounds_completed_ = 0;
  std::vector<Owner> owner_;
  std::vector<EdgeId> free_list_;
  std::vector<std::uint32_t> free_pos_;
  std::vector<int> maker_deg_, breaker_deg_, free_deg_;
  mutable std::uint64_t cursor_ = 0;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  // Append up to `count` free, pairwise distinct edges to `out`. The engine
  // substitutes the smallest free edge for anything missing or invalid.
  virtual void next_moves(const GameState& state, int count, Rng& rng,
                          std::vector<EdgeId>& out) = 0;
  // Full edge permutation when the strategy plays one; used to reconstruct
  // the random-graph coupling in analyses.
  virtual const std::vector<EdgeId>* permutation() const { return nullptr; }
};

enum class SigmaKind { None, InducedPrefix, FullPermutation };

struct Move {
  EdgeId edge;
  Owner owner;
  bool operator==(const Move&) const = default;
};

struct GameRecord {
  GameConfig config;
  std::uint64_t seed = 0;
  std::vector<Move> play_sequence;
  int stop_round = 0;
  std::optional<bool> maker_achieved;  // annotated by the experiment layer
  std::vector<std::uint32_t> substituted_moves;
  SigmaKind sigma_kind = SigmaKind::None;
  std::vector<EdgeId> sigma;  // populated for FullPermutation
  std::string maker_name, breaker_name;

  // Maker's picks in play order; doubles as the permutation prefix for
  // records without a full sigma.
  std::vector<EdgeId> maker_pick_order() const {
    std::vector<EdgeId> picks;
    for (const Move& m : play_sequence)
      if (m.owner == Owner::Maker) picks.push_back(m.edge);
    return picks;
  }
};

namespace detail {

// Fast stop-rule evaluation for the two properties games actually stop on;
// everything else snapshots Maker's graph.
class StopEvaluator {
 public:
  StopEvaluator(const GameConfig& cfg) : cfg_(cfg) {
    if (cfg.stop_rule.kind == StopRule::Kind::PropertyAchieved &&
        cfg.stop_rule.property.kind == PropertyKind::Connected) {
      parent_.resize(cfg.n);
      for (int i = 0; i < cfg.n; ++i) parent_[i] = i;
      components_ = cfg.n;
    }
  }

  void on_maker_edge(Vertex u, Vertex v) {
    if (parent_.empty()) return;
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent_[ru] = rv;
      --components_;
    }
  }

  bool achieved(const GameState& st) const {
    const PropertyId& p = cfg_.stop_rule.property;
    switch (p.kind) {
      case PropertyKind::MinDegree: {
        for (Vertex v = 0; v < st.n(); ++v)
          if (st.maker_degree(v) < p.k) return false;
        return true;
      }
      case PropertyKind::Connected:
        return components_ == 1;
      default:
        return check_property(st.graph_of(Owner::Maker), p);
    }
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  GameConfig cfg_;
  mutable std::vector<int> parent_;
  int components_ = 0;
};

}  // namespace detail

inline GameRecord play_game(const GameConfig& cfg, Strategy& maker, Strategy& breaker,
                            std::uint64_t seed) {
  cfg.validate();
  GameState st(cfg);
  Rng rng(seed);
  GameRecord rec;
  rec.config = cfg;
  rec.seed = seed;
  rec.maker_name = maker.name();
  rec.breaker_name = breaker.name();

  detail::StopEvaluator stop_eval(cfg);
  std::vector<EdgeId> proposed;

  // Claims one turn for `who`; returns the number of edges actually claimed.
  auto run_turn = [&](Strategy& strat, Owner who, int bias) -> int {
    const int want = static_cast<int>(std::min<std::uint64_t>(bias, st.free_count()));
    if (want == 0) return 0;
    proposed.clear();
    try {
      strat.next_moves(st, want, rng, proposed);
    } catch (const std::exception& ex) {
      throw std::runtime_error("strategy '" + strat.name() + "' failed in round " +
                               std::to_string(st.rounds_completed() + 1) + ": " + ex.what());
    }
    for (int i = 0; i < want; ++i) {
      EdgeId e = (static_cast<std::size_t>(i) < proposed.size()) ? proposed[i]
                                                                 : static_cast<EdgeId>(-1);
      const bool ok = e < st.total_edges() && st.is_free(e);
      if (!ok) {
        e = st.smallest_free_edge();
        rec.substituted_moves.push_back(static_cast<std::uint32_t>(rec.play_sequence.size()));
      }
      st.claim(e, who);
      if (who == Owner::Maker) {
        const auto [u, v] = edge_endpoints(e, cfg.n);
        stop_eval.on_maker_edge(u, v);
      }
      rec.play_sequence.push_back({e, who});
    }
    return want;
  };

  for (;;) {
    const int round = st.rounds_completed() + 1;
    run_turn(maker, Owner::Maker, cfg.a);
    if (st.free_count() == 0) {
      rec.stop_round = round;
      break;
    }
    run_turn(breaker, Owner::Breaker, cfg.b);
    st.finish_round();
    if (st.free_count() == 0) {
      rec.stop_round = round;
      break;
    }
    if (cfg.stop_rule.kind == StopRule::Kind::PropertyAchieved && stop_eval.achieved(st)) {
      rec.stop_round = round;
      break;
    }
    if (cfg.max_rounds && round >= *cfg.max_rounds) {
      rec.stop_round = round;
      break;
    }
  }

  if (const auto* sigma = maker.permutation()) {
    rec.sigma_kind = SigmaKind::FullPermutation;
    rec.sigma = *sigma;
  } else if (rec.maker_name == "uniform") {
    rec.sigma_kind = SigmaKind::InducedPrefix;
  }
  return rec;
}

// Walks a play-sequence enforcing the per-round turn shape: a Maker entries
// then b Breaker entries, with a shorter run legal only when the sequence
// ends there.
template <typename OnMove>
inline std::optional<std::pair<std::size_t, std::string>> walk_play_sequence(
    const GameRecord& rec, OnMove&& on_move) {
  const auto& seq = rec.play_sequence;
  const int a = rec.config.a, b = rec.config.b;
  std::size_t pos = 0;
  int round = 1;
  while (pos < seq.size()) {
    for (int i = 0; i < a; ++i) {
      if (pos == seq.size()) return std::nullopt;
      if (seq[pos].owner != Owner::Maker)
        return std::make_pair(pos, "expected a Maker entry in round " + std::to_string(round));
      on_move(seq[pos], round);
      ++pos;
    }
    for (int i = 0; i < b; ++i) {
      if (pos == seq.size()) return std::nullopt;
      if (seq[pos].owner != Owner::Breaker)
        return std::make_pair(pos, "expected a Breaker entry in round " + std::to_string(round));
      on_move(seq[pos], round);
      ++pos;
    }
    ++round;
  }
  return std::nullopt;
}

inline int rounds_in_record(const GameRecord& rec) {
  int last = 0;
  walk_play_sequence(rec, [&](const Move&, int round) { last = round; });
  return last;
}

struct RecordValidation {
  bool valid = true;
  std::optional<std::size_t> violation_index;
  std::string message;

  static RecordValidation failure(std::size_t index, std::string msg) {
    return {false, index, std::move(msg)};
  }
};

inline RecordValidation validate_record(const GameRecord& rec) {
  const std::uint64_t total = edge_count(rec.config.n);
  std::vector<bool> seen(total, false);
  for (std::size_t i = 0; i < rec.play_sequence.size(); ++i) {
    const EdgeId e = rec.play_sequence[i].edge;
    if (e >= total) return RecordValidation::failure(i, "edge id out of range");
    if (seen[e]) return RecordValidation::failure(i, "duplicate edge in play-sequence");
    seen[e] = true;
  }
  if (auto bad = walk_play_sequence(rec, [](const Move&, int) {}))
    return RecordValidation::failure(bad->first, bad->second);
  const int rounds = rounds_in_record(rec);
  if (rounds != rec.stop_round)
    return RecordValidation::failure(rec.play_sequence.size(),
                                     "stop_round does not match the play-sequence");
  return {};
}

// Exact state after round r, by replaying the recorded prefix.
inline GameState state_at_round(const GameRecord& rec, int r) {
  if (r < 0 || r > rec.stop_round)
    throw std::invalid_argument("state_at_round: round out of range");
  GameState st(rec.config);
  int completed = 0;
  walk_play_sequence(rec, [&](const Move& m, int round) {
    if (round <= r) {
      st.claim(m.edge, m.owner);
      completed = round;
    }
  });
  while (st.rounds_completed() < std::min(completed, r)) st.finish_round();
  return st;
}

inline SimpleGraph maker_graph_at(const GameRecord& rec, int r) {
  SimpleGraph g(rec.config.n);
  walk_play_sequence(rec, [&](const Move& m, int round) {
    if (round <= r && m.owner == Owner::Maker) g.add_edge(m.edge);
  });
  return g;
}

}  // namespace mbg
