#include <catch2/catch_amalgamated.hpp>

#include "mbg/half_expander.hpp"
#include "mbg/random_graph.hpp"

using namespace mbg;

namespace {

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("cut_edge_count") {
  const SimpleGraph k5 = complete_graph(5);
  CHECK(cut_edge_count(k5, {0, 1, 2, 3, 4}) == 0);
  CHECK(cut_edge_count(k5, {2}) == 4);

  SimpleGraph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(0, 3);
  CHECK(cut_edge_count(c4, {0, 1}) == 2);
}

TEST_CASE("an isolated vertex violates property 1") {
  // lambda*n/r = 1, so singletons are in scope of the expansion property and
  // the isolated vertex is the first witness.
  SimpleGraph g(20);
  for (Vertex v = 1; v < 19; ++v) g.add_edge(v, v + 1);
  g.add_edge(1, 19);  // vertex 0 isolated
  const auto verdict = is_half_expander_exact(g, {0.1, 2.0});
  REQUIRE_FALSE(verdict.pass);
  CHECK(verdict.violated_property == 1);
  CHECK(verdict.witness_x == std::vector<Vertex>{0});
}

TEST_CASE("the edgeless graph fails property 1") {
  const auto verdict = is_half_expander_exact(SimpleGraph(8), {0.3, 1.5});
  REQUIRE_FALSE(verdict.pass);
  CHECK(verdict.violated_property == 1);
}

TEST_CASE("parameter validation and size limit") {
  CHECK_THROWS_AS(is_half_expander_exact(SimpleGraph(4), {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(is_half_expander_exact(SimpleGraph(30), {0.1, 1.0}), UnsupportedSizeError);
}

TEST_CASE("complete graphs pass for tame parameters") {
  // With a tiny lambda, properties 1 and 2 are vacuous at this size and
  // property 3 only constrains pairs of at least 7 vertices, whose cuts in
  // K16 have 49 > 2n edges.
  const auto verdict = is_half_expander_exact(complete_graph(16), {2e-5, 1.0});
  CHECK(verdict.pass);
  // The clamped property-3 lower bound makes singleton pairs binding for
  // large lambda, which no graph of this size satisfies.
  const auto strict = is_half_expander_exact(complete_graph(10), {0.3, 1.2});
  REQUIRE_FALSE(strict.pass);
  CHECK(strict.violated_property == 3);
}

TEST_CASE("sampled mode agrees with exact mode where both run") {
  Rng rng(314159);
  const HalfExpanderParams params{0.3, 1.2};
  int exact_fails = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const SimpleGraph g = sample_gnm(12, 40, rng);
    const auto exact = is_half_expander_exact(g, params);
    Rng srng(rng.next());
    const auto sampled = is_half_expander_sampled(g, params, 150, srng);
    if (!sampled.pass) {
      // A sampled violation carries a concrete witness the exact decision
      // must agree with.
      REQUIRE_FALSE(exact.pass);
    }
    exact_fails += !exact.pass;
  }
  CHECK(exact_fails > 0);  // corpus exercises failures
}

TEST_CASE("removing an edge never repairs a failed verdict") {
  // Monotone under edge addition: a fail stays a fail after deleting edges.
  Rng rng(55);
  const HalfExpanderParams params{0.25, 1.5};
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleGraph g = sample_gnm(10, 5 + rng.below(25), rng);
    if (is_half_expander_exact(g, params).pass) continue;
    // Delete one random edge.
    SimpleGraph smaller(g.n());
    const std::size_t drop = rng.below(g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i)
      if (i != drop) smaller.add_edge(g.edges()[i]);
    CHECK_FALSE(is_half_expander_exact(smaller, params).pass);
  }
}

TEST_CASE("expansion stats on extreme graphs") {
  Rng rng(47);
  const auto complete = expansion_stats(complete_graph(10), rng, 100);
  // Any proper X in K10 reaches every vertex.
  CHECK(complete.min_neighborhood_ratio >= (10 - 1) / 10.0);
  const auto empty = expansion_stats(SimpleGraph(10), rng, 100);
  CHECK(empty.min_neighborhood_ratio == 0.0);
  CHECK(empty.min_pair_edges == 0);
}
