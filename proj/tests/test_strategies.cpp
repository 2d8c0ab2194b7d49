#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <numeric>

#include "mbg/game.hpp"
#include "mbg/random_graph.hpp"
#include "mbg/strategies.hpp"

using namespace mbg;

namespace {

GameConfig cfg_of(int n, int a, int b) {
  GameConfig cfg;
  cfg.n = n;
  cfg.a = a;
  cfg.b = b;
  return cfg;
}

}  // namespace

TEST_CASE("uniform maker draws the single remaining edge") {
  GameState st(2, 1, 1);
  Rng rng(1);
  auto maker = make_uniform_maker();
  std::vector<EdgeId> out;
  maker->next_moves(st, 1, rng, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == 0);
}

TEST_CASE("uniform maker first move is uniform on K3") {
  auto maker = make_uniform_maker();
  std::map<EdgeId, int> freq;
  const int draws = 100000;
  Rng rng(2024);
  GameState st(3, 1, 1);
  std::vector<EdgeId> out;
  for (int i = 0; i < draws; ++i) {
    out.clear();
    maker->next_moves(st, 1, rng, out);
    ++freq[out[0]];
  }
  for (EdgeId e = 0; e < 3; ++e)
    CHECK(std::abs(freq[e] / double(draws) - 1.0 / 3) < 0.01);
}

TEST_CASE("seeded strategies repeat their draw sequence") {
  auto maker = make_uniform_maker();
  std::vector<EdgeId> first, second;
  for (auto* out : {&first, &second}) {
    Rng rng(777);
    GameState st(6, 1, 1);
    for (int i = 0; i < 10; ++i) {
      std::vector<EdgeId> turn;
      maker->next_moves(st, 1, rng, turn);
      st.claim(turn[0], Owner::Maker);
      out->push_back(turn[0]);
    }
  }
  CHECK(first == second);
}

TEST_CASE("permutation maker scans forward and skips occupied edges") {
  EdgePermutation identity;
  identity.order.resize(edge_count(4));
  std::iota(identity.order.begin(), identity.order.end(), 0u);

  SECTION("fresh board returns the first edges") {
    PermutationStrategy strat(identity);
    GameState st(4, 2, 1);
    Rng rng(0);
    std::vector<EdgeId> out;
    strat.next_moves(st, 2, rng, out);
    CHECK(out == std::vector<EdgeId>{0, 1});
  }
  SECTION("an opponent edge is skipped") {
    PermutationStrategy strat(identity);
    GameState st(4, 1, 1);
    st.claim(0, Owner::Breaker);
    Rng rng(0);
    std::vector<EdgeId> out;
    strat.next_moves(st, 1, rng, out);
    CHECK(out == std::vector<EdgeId>{1});
  }
  SECTION("an exhausted list returns a short turn") {
    PermutationStrategy strat(identity);
    GameState st(4, 1, 1);
    for (EdgeId e = 0; e < 5; ++e) st.claim(e, Owner::Breaker);
    Rng rng(0);
    std::vector<EdgeId> out;
    strat.next_moves(st, 3, rng, out);
    CHECK(out == std::vector<EdgeId>{5});
  }
}

TEST_CASE("sample_edge_permutation is uniform") {
  Rng rng(5);
  SECTION("n=2 has one ordering") {
    const auto perm = sample_edge_permutation(2, rng);
    CHECK(perm.order == std::vector<EdgeId>{0});
  }
  SECTION("n=3 orderings appear with frequency 1/6") {
    std::map<std::vector<EdgeId>, int> freq;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) ++freq[sample_edge_permutation(3, rng).order];
    REQUIRE(freq.size() == 6);
    for (const auto& [order, count] : freq)
      CHECK(std::abs(count / double(draws) - 1.0 / 6) < 0.01);
  }
  SECTION("same seed, same permutation") {
    Rng r1(9), r2(9);
    CHECK(sample_edge_permutation(6, r1).order == sample_edge_permutation(6, r2).order);
  }
}

TEST_CASE("permutation maker without a breaker reproduces the prefix graph") {
  // Claiming m edges against no interference yields exactly the first m
  // edges of sigma as Maker's graph.
  Rng rng(13);
  auto perm = sample_edge_permutation(8, rng);
  PermutationStrategy strat(perm);
  GameState st(8, 1, 1);
  Rng game_rng(0);
  for (std::size_t m = 1; m <= 12; ++m) {
    std::vector<EdgeId> out;
    strat.next_moves(st, 1, game_rng, out);
    REQUIRE(out.size() == 1);
    st.claim(out[0], Owner::Maker);
    CHECK(out[0] == perm.order[m - 1]);
  }
}

TEST_CASE("isolation breaker picks the smallest isolated vertex and its star") {
  auto breaker = make_isolation_breaker(0.3);
  GameState st(5, 1, 1);
  Rng rng(0);
  std::vector<EdgeId> out;
  breaker->next_moves(st, 1, rng, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == edge_index(0, 1, 5));
}

TEST_CASE("isolation breaker targets the smallest Maker-degree-0 vertex") {
  auto breaker = make_isolation_breaker(0.3);
  GameState st(5, 1, 1);
  st.claim(edge_index(0, 2, 5), Owner::Maker);  // vertices 0 and 2 are touched
  Rng rng(0);
  std::vector<EdgeId> out;
  breaker->next_moves(st, 1, rng, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == edge_index(1, 0, 5));  // target v1, smallest other endpoint first
}

TEST_CASE("isolation fail cap evaluates the forfeit formula") {
  CHECK(isolation_fail_cap(0.2, 1000000) == 1);
  CHECK(isolation_fail_cap(0.3, 500) == 1);
  // Small boards stay clamped at one attempt.
  CHECK(isolation_fail_cap(0.5, 4) == 1);
}

TEST_CASE("isolation breaker completes a full star in endpoint order") {
  // A permutation Maker whose list starts with all edges avoiding vertex 0
  // leaves the target star alone long enough for a clean isolation.
  const int n = 6;
  EdgePermutation avoid0;
  for (EdgeId e = 0; e < edge_count(n); ++e) {
    const auto [u, v] = edge_endpoints(e, n);
    if (u != 0 && v != 0) avoid0.order.push_back(e);
  }
  for (Vertex v = 1; v < n; ++v) avoid0.order.push_back(edge_index(0, v, n));

  auto maker = make_permutation_maker(avoid0);
  IsolationBreaker breaker(0.3);
  auto rec = play_game(cfg_of(n, 1, 1), *maker, breaker, 0);

  std::vector<EdgeId> breaker_moves;
  for (const Move& m : rec.play_sequence)
    if (m.owner == Owner::Breaker) breaker_moves.push_back(m.edge);
  REQUIRE(breaker_moves.size() >= n - 1);
  for (Vertex v = 1; v < n; ++v) CHECK(breaker_moves[v - 1] == edge_index(0, v, n));
}

TEST_CASE("isolation breaker keeps a viable target") {
  // Fuzz: while the target has Maker-degree 0 and free incident edges, the
  // breaker claims inside its star.
  Rng meta(21);
  for (int trial = 0; trial < 50; ++trial) {
    IsolationBreaker breaker(0.3);
    auto maker = make_uniform_maker();
    GameState st(8, 1, 1);
    Rng rng(meta.next());
    std::vector<EdgeId> out;
    std::optional<Vertex> prev_target;
    while (st.free_count() > 1) {
      out.clear();
      maker->next_moves(st, 1, rng, out);
      st.claim(out[0], Owner::Maker);
      if (st.free_count() == 0) break;
      out.clear();
      const auto before = breaker.target();
      breaker.next_moves(st, 1, rng, out);
      REQUIRE(out.size() == 1);
      REQUIRE(st.is_free(out[0]));
      const auto after = breaker.target();
      if (before && after && st.maker_degree(*before) == 0 && st.free_degree(*before) > 0)
        REQUIRE(*after == *before);
      st.claim(out[0], Owner::Breaker);
      prev_target = after;
    }
    (void)prev_target;
  }
}

TEST_CASE("strategies return only free distinct edges") {
  Rng meta(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(meta.below(8));
    GameState st(n, 1, 1);
    // Random mid-game position.
    const std::uint64_t total = edge_count(n);
    const std::size_t claimed = meta.below(total);
    std::vector<EdgeId> ids(total);
    std::iota(ids.begin(), ids.end(), 0u);
    for (std::size_t i = 0; i < claimed; ++i) {
      const std::size_t j = i + meta.below(total - i);
      std::swap(ids[i], ids[j]);
      st.claim(ids[i], meta.below(2) ? Owner::Maker : Owner::Breaker);
    }
    const int count = 1 + static_cast<int>(meta.below(3));
    Rng rng(meta.next());
    for (auto make : {+[] { return make_uniform_maker(); }, +[] { return make_permutation_maker(); }}) {
      auto strat = make();
      std::vector<EdgeId> out;
      strat->next_moves(st, count, rng, out);
      REQUIRE(out.size() <= std::min<std::size_t>(count, st.free_count()));
      for (std::size_t i = 0; i < out.size(); ++i) {
        REQUIRE(st.is_free(out[i]));
        for (std::size_t j = i + 1; j < out.size(); ++j) REQUIRE(out[i] != out[j]);
      }
    }
    // The isolation breaker plays single moves only.
    IsolationBreaker iso(0.3);
    if (st.free_count() > 0) {
      std::vector<EdgeId> out;
      iso.next_moves(st, 1, rng, out);
      REQUIRE(out.size() == 1);
      REQUIRE(st.is_free(out[0]));
    }
  }
}

TEST_CASE("isolation breaker rejects multi-move turns") {
  IsolationBreaker breaker(0.3);
  GameState st(5, 1, 2);
  Rng rng(0);
  std::vector<EdgeId> out;
  CHECK_THROWS_AS(breaker.next_moves(st, 2, rng, out), std::invalid_argument);
}

TEST_CASE("random breaker matches direct G(n,m) sampling on degree statistics") {
  // Random vs random: Maker's graph after m rounds is a uniform G(n,m).
  // Compare the isolated-vertex count, a sensitive statistic, over samples.
  const int n = 200, rounds = 100, samples = 200;
  double game_isolated = 0, gnm_isolated = 0;
  Rng seeds(404);
  for (int s = 0; s < samples; ++s) {
    GameConfig cfg = cfg_of(n, 1, 1);
    cfg.max_rounds = rounds;
    cfg.stop_rule = StopRule::round_cap();
    auto maker = make_uniform_maker();
    auto breaker = make_random_breaker();
    auto rec = play_game(cfg, *maker, *breaker, seeds.next());
    const SimpleGraph g = maker_graph_at(rec, rec.stop_round);
    REQUIRE(g.num_edges() == static_cast<std::size_t>(rounds));
    for (Vertex v = 0; v < n; ++v) game_isolated += (g.degree(v) == 0);

    Rng gr(seeds.next());
    const SimpleGraph h = sample_gnm(n, rounds, gr);
    for (Vertex v = 0; v < n; ++v) gnm_isolated += (h.degree(v) == 0);
  }
  game_isolated /= samples;
  gnm_isolated /= samples;
  // Expected count is near n*e^-1 ~ 73.6; allow generous Monte Carlo slack.
  CHECK(std::abs(game_isolated - gnm_isolated) < 2.5);
}
