// Player strategies: uniform random Maker, permutation Maker, the Breaker
// isolation strategy with its forfeit cap, uniform random Breaker, and the
// smallest-free-edge fallback player.
#pragma once

#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbg/game.hpp"

namespace mbg {

// ---------------------------------------------------------------------------
// Random players

class UniformRandomStrategy : public Strategy {
 public:
  explicit UniformRandomStrategy(std::string name = "uniform") : name_(std::move(name)) {}

  std::string name() const override { return name_; }

  void next_moves(const GameState& state, int count, Rng& rng,
                  std::vector<EdgeId>& out) override {
    // Sequential uniform picks among edges still free at each sub-move,
    // emulated by rejection against the edges already picked this turn.
    const auto& free = state.free_edges();
    const std::size_t take = std::min<std::size_t>(count, free.size());
    for (std::size_t i = 0; i < take; ++i) {
      for (;;) {
        const EdgeId e = free[rng.below(free.size())];
        bool dup = false;
        for (std::size_t j = out.size() - i; j < out.size(); ++j) dup |= (out[j] == e);
        if (!dup) {
          out.push_back(e);
          break;
        }
      }
    }
  }

 private:
  std::string name_;
};

inline std::unique_ptr<Strategy> make_uniform_maker() {
  return std::make_unique<UniformRandomStrategy>("uniform");
}

inline std::unique_ptr<Strategy> make_random_breaker() {
  return std::make_unique<UniformRandomStrategy>("random");
}

// ---------------------------------------------------------------------------
// Permutation strategy

struct EdgePermutation {
  std::vector<EdgeId> order;
  std::size_t cursor = 0;
};

inline EdgePermutation sample_edge_permutation(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("sample_edge_permutation: n must be at least 2");
  EdgePermutation perm;
  perm.order.resize(edge_count(n));
  std::iota(perm.order.begin(), perm.order.end(), 0u);
  rng.shuffle(perm.order);
  return perm;
}

// Scans a fixed edge ordering and claims the next free edges. With no
// explicit ordering, a uniform one is drawn on the first move.
class PermutationStrategy : public Strategy {
 public:
  PermutationStrategy() = default;
  explicit PermutationStrategy(EdgePermutation perm) : perm_(std::move(perm)) {}

  std::string name() const override { return "permutation"; }

  void next_moves(const GameState& state, int count, Rng& rng,
                  std::vector<EdgeId>& out) override {
    if (perm_.order.empty()) perm_ = sample_edge_permutation(state.n(), rng);
    int found = 0;
    while (found < count && perm_.cursor < perm_.order.size()) {
      const EdgeId e = perm_.order[perm_.cursor++];
      if (state.is_free(e)) {
        // Edges already returned this turn are no longer free conceptually,
        // but the cursor cannot revisit them, so a liveness check suffices.
        out.push_back(e);
        ++found;
      }
    }
  }

  const std::vector<EdgeId>* permutation() const override {
    return perm_.order.empty() ? nullptr : &perm_.order;
  }

 private:
  EdgePermutation perm_;
};

inline std::unique_ptr<Strategy> make_permutation_maker() {
  return std::make_unique<PermutationStrategy>();
}

inline std::unique_ptr<Strategy> make_permutation_maker(EdgePermutation perm) {
  return std::make_unique<PermutationStrategy>(std::move(perm));
}

// ---------------------------------------------------------------------------
// Smallest-free-edge player (the fallback convention as a standalone player)

class SmallestFreeStrategy : public Strategy {
 public:
  std::string name() const override { return "smallest"; }
  void next_moves(const GameState&, int, Rng&, std::vector<EdgeId>&) override {
    // Returning nothing makes the engine substitute smallest free edges,
    // which is exactly this player's move rule.
  }
};

inline std::unique_ptr<Strategy> make_smallest_free_player() {
  return std::make_unique<SmallestFreeStrategy>();
}

// ---------------------------------------------------------------------------
// Isolation Breaker

// floor of (1-eps) ln n / (4 ln ln n), clamped to at least one attempt.
inline int isolation_fail_cap(double eps, int n) {
  const double lnn = std::log(static_cast<double>(n));
  const double lnlnn = std::log(lnn);
  const double raw = (1.0 - eps) * lnn / (4.0 * lnlnn);
  if (!std::isfinite(raw)) return 1;
  return std::max(1, static_cast<int>(std::floor(raw)));
}

// Tries to isolate the smallest-index vertex without Maker edges by claiming
// its free star in increasing order of the other endpoint; gives up after
// fail_cap failed attempts and then plays smallest free edges.
class IsolationBreaker : public Strategy {
 public:
  explicit IsolationBreaker(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1.0))
      throw std::invalid_argument("isolation breaker: eps must lie in (0,1)");
  }

  std::string name() const override { return "isolation"; }

  int failures() const { return failures_; }
  bool forfeited() const { return forfeited_; }
  int fail_cap() const { return fail_cap_; }
  std::optional<Vertex> target() const {
    return target_ < 0 ? std::nullopt : std::optional<Vertex>(target_);
  }

  void next_moves(const GameState& state, int count, Rng&, std::vector<EdgeId>& out) override {
    if (count != 1)
      throw std::invalid_argument("isolation breaker supports Breaker bias 1 only");
    if (fail_cap_ == 0) fail_cap_ = isolation_fail_cap(eps_, state.n());

    if (target_ >= 0) {
      if (state.maker_degree(target_) > 0) {
        // Failure is observed at the start of the Breaker turn.
        target_ = -1;
        if (++failures_ >= fail_cap_) forfeited_ = true;
      } else if (state.free_degree(target_) == 0) {
        // Star complete: the vertex is isolated in Maker's graph. Move on.
        target_ = -1;
      }
    }

    if (!forfeited_ && target_ < 0) {
      // Eligibility is monotone per vertex, so the scan cursor never rewinds.
      while (scan_from_ < state.n() &&
             !(state.maker_degree(scan_from_) == 0 && state.free_degree(scan_from_) > 0))
        ++scan_from_;
      if (scan_from_ < state.n()) {
        target_ = scan_from_;
        claim_from_ = 0;
      } else {
        forfeited_ = true;  // no isolatable vertex can appear later
      }
    }

    if (state.free_count() == 0) return;
    if (forfeited_ || target_ < 0) {
      out.push_back(state.smallest_free_edge());
      return;
    }
    while (claim_from_ < state.n()) {
      if (claim_from_ != target_) {
        const EdgeId e = edge_index(target_, claim_from_, state.n());
        if (state.is_free(e)) {
          out.push_back(e);
          ++claim_from_;
          return;
        }
      }
      ++claim_from_;
    }
    // The free-degree check above makes this unreachable; stay safe anyway.
    out.push_back(state.smallest_free_edge());
  }

 private:
  double eps_;
  int fail_cap_ = 0;  // resolved lazily from the board size
  int failures_ = 0;
  bool forfeited_ = false;
  Vertex target_ = -1;
  Vertex scan_from_ = 0;
  Vertex claim_from_ = 0;
};

inline std::unique_ptr<Strategy> make_isolation_breaker(double eps) {
  return std::make_unique<IsolationBreaker>(eps);
}

// ---------------------------------------------------------------------------
// Selection strings: maker=uniform|permutation,
// breaker=isolation:eps=<real>|random|smallest

inline std::unique_ptr<Strategy> make_maker(const std::string& spec) {
  if (spec == "uniform") return make_uniform_maker();
  if (spec == "permutation") return make_permutation_maker();
  if (spec == "smallest") return make_smallest_free_player();
  throw std::invalid_argument("unknown maker strategy: " + spec);
}

inline std::unique_ptr<Strategy> make_breaker(const std::string& spec) {
  if (spec == "random") return make_random_breaker();
  if (spec == "smallest") return make_smallest_free_player();
  if (spec.rfind("isolation", 0) == 0) {
    double eps = 0.3;
    const auto pos = spec.find(":eps=");
    if (pos != std::string::npos) eps = std::stod(spec.substr(pos + 5));
    else if (spec != "isolation")
      throw std::invalid_argument("unknown breaker strategy: " + spec);
    return make_isolation_breaker(eps);
  }
  throw std::invalid_argument("unknown breaker strategy: " + spec);
}

}  // namespace mbg
