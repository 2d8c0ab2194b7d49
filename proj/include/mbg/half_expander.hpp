// Half-expander verification. A graph is a half-expander with parameters
// (lambda, r) when
//   1. |N(X)| >= r|X|            for every X with |X| <= lambda*n/r,
//   2. |N(X)| >= (1/2 - lambda)n for every X with |X| >= n/(lambda*r),
//   3. e(X,Y) > 2n               for disjoint X, Y with both sizes at least
//                                (1/2 - lambda^(1/5))n (lower bound clamped
//                                to nonempty sets).
// N(X) is the set of vertices with a neighbour in X; it may meet X.
// Exact mode enumerates subsets (n <= 22); sampled mode only reports
// "no violation found".
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mbg/graph.hpp"
#include "mbg/properties.hpp"
#include "mbg/rng.hpp"

namespace mbg {

struct HalfExpanderParams {
  double lambda = 0.0;
  double r = 0.0;

  void validate() const {
    if (!(lambda > 0.0) || !(r > 0.0))
      throw std::invalid_argument("half-expander parameters must be positive");
  }
};

struct HalfExpanderVerdict {
  bool pass = true;
  std::optional<int> violated_property;      // 1, 2 or 3
  std::vector<Vertex> witness_x, witness_y;  // witness_y used by property 3
  bool sampled = false;
  std::uint64_t samples = 0;

  static HalfExpanderVerdict violation(int property, std::vector<Vertex> x,
                                       std::vector<Vertex> y = {}) {
    HalfExpanderVerdict v;
    v.pass = false;
    v.violated_property = property;
    v.witness_x = std::move(x);
    v.witness_y = std::move(y);
    return v;
  }
};

// Edges with exactly one endpoint in X.
inline std::size_t cut_edge_count(const SimpleGraph& g, const std::vector<Vertex>& x) {
  std::vector<bool> in_x(g.n(), false);
  for (Vertex v : x) in_x[v] = true;
  std::size_t cut = 0;
  for (EdgeId e : g.edges()) {
    const auto [u, v] = edge_endpoints(e, g.n());
    if (in_x[u] != in_x[v]) ++cut;
  }
  return cut;
}

namespace detail {

constexpr int kHalfExpanderExactLimit = 22;

inline std::vector<Vertex> mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

// e(X,Y) between disjoint vertex masks.
inline std::size_t edges_between_masks(const std::vector<std::uint32_t>& adj, std::uint32_t x,
                                       std::uint32_t y) {
  std::size_t total = 0;
  std::uint32_t rest = x;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    total += std::popcount(adj[v] & y);
  }
  return total;
}

inline std::uint32_t neighborhood_mask(const std::vector<std::uint32_t>& adj, std::uint32_t x) {
  std::uint32_t nb = 0;
  std::uint32_t rest = x;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    nb |= adj[v];
  }
  return nb;
}

}  // namespace detail

// Size thresholds shared by both modes. Property 3's lower bound may fall
// below one vertex for large lambda; it is clamped at 1.
struct HalfExpanderThresholds {
  double r;           // expansion factor required by property 1
  double small_max;   // property 1 applies to |X| <= small_max
  double large_min;   // property 2 applies to |X| >= large_min
  double pair_min;    // property 3 applies to |X|,|Y| >= pair_min
  double nb2_min;     // property 2 requires |N(X)| >= nb2_min
  std::size_t cut_min;  // property 3 requires e(X,Y) > cut_min

  HalfExpanderThresholds(const HalfExpanderParams& p, int n)
      : r(p.r),
        small_max(p.lambda * n / p.r),
        large_min(static_cast<double>(n) / (p.lambda * p.r)),
        pair_min(std::max(1.0, (0.5 - std::pow(p.lambda, 0.2)) * n)),
        nb2_min((0.5 - p.lambda) * n),
        cut_min(2 * static_cast<std::size_t>(n)) {}
};

inline HalfExpanderVerdict is_half_expander_exact(const SimpleGraph& g,
                                                  const HalfExpanderParams& params) {
  params.validate();
  const int n = g.n();
  if (n > detail::kHalfExpanderExactLimit)
    throw UnsupportedSizeError("half-expander exact mode supports n <= 22");
  const HalfExpanderThresholds th(params, n);
  const auto adj = detail::adjacency_masks(g);
  const std::uint32_t full = (1u << n) - 1;

  for (std::uint32_t x = 1; x <= full; ++x) {
    const int size = std::popcount(x);
    const std::uint32_t nb = detail::neighborhood_mask(adj, x);
    const int nb_size = std::popcount(nb);
    if (size <= th.small_max && nb_size < th.r * size)
      return HalfExpanderVerdict::violation(1, detail::mask_to_set(x));
    if (size >= th.large_min && nb_size < th.nb2_min)
      return HalfExpanderVerdict::violation(2, detail::mask_to_set(x));
  }

  for (std::uint32_t x = 1; x <= full; ++x) {
    if (std::popcount(x) < th.pair_min) continue;
    const std::uint32_t rest = full & ~x;
    // Enumerate Y over subsets of the complement.
    for (std::uint32_t y = rest; y; y = (y - 1) & rest) {
      if (std::popcount(y) < th.pair_min) continue;
      if (detail::edges_between_masks(adj, x, y) <= th.cut_min)
        return HalfExpanderVerdict::violation(3, detail::mask_to_set(x), detail::mask_to_set(y));
    }
  }
  return {};
}

inline HalfExpanderVerdict is_half_expander_sampled(const SimpleGraph& g,
                                                    const HalfExpanderParams& params,
                                                    std::uint64_t samples, Rng& rng) {
  params.validate();
  const int n = g.n();
  const HalfExpanderThresholds th(params, n);

  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<bool> mark(n);

  auto sample_set = [&](std::size_t size, std::size_t offset) {
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j = offset + i + rng.below(n - offset - i);
      std::swap(pool[offset + i], pool[j]);
    }
    return std::vector<Vertex>(pool.begin() + offset, pool.begin() + offset + size);
  };
  auto neighborhood_size = [&](const std::vector<Vertex>& x) {
    std::fill(mark.begin(), mark.end(), false);
    std::size_t cnt = 0;
    for (Vertex v : x)
      for (Vertex w : g.neighbors(v))
        if (!mark[w]) {
          mark[w] = true;
          ++cnt;
        }
    return cnt;
  };

  HalfExpanderVerdict verdict;
  verdict.sampled = true;
  verdict.samples = samples;

  const std::size_t small_cap = static_cast<std::size_t>(
      std::min<double>(n, std::floor(th.small_max)));
  const std::size_t large_lo = static_cast<std::size_t>(std::ceil(th.large_min));
  const std::size_t pair_lo = static_cast<std::size_t>(std::ceil(th.pair_min));

  for (std::uint64_t s = 0; s < samples; ++s) {
    if (small_cap >= 1) {
      const std::size_t size = 1 + rng.below(small_cap);
      auto x = sample_set(size, 0);
      if (neighborhood_size(x) < th.r * static_cast<double>(size))
        return HalfExpanderVerdict::violation(1, std::move(x));
    }
    if (large_lo <= static_cast<std::size_t>(n)) {
      const std::size_t size = large_lo + rng.below(n - large_lo + 1);
      auto x = sample_set(size, 0);
      if (neighborhood_size(x) < th.nb2_min)
        return HalfExpanderVerdict::violation(2, std::move(x));
    }
    if (2 * pair_lo <= static_cast<std::size_t>(n)) {
      const std::size_t xs = pair_lo + rng.below(n - 2 * pair_lo + 1);
      auto x = sample_set(xs, 0);
      const std::size_t ymax = n - xs;
      if (ymax >= pair_lo) {
        const std::size_t ys = pair_lo + rng.below(ymax - pair_lo + 1);
        auto y = sample_set(ys, xs);
        std::fill(mark.begin(), mark.end(), false);
        for (Vertex v : y) mark[v] = true;
        std::size_t between = 0;
        for (Vertex v : x)
          for (Vertex w : g.neighbors(v))
            if (mark[w]) ++between;
        if (between <= th.cut_min)
          return HalfExpanderVerdict::violation(3, std::move(x), std::move(y));
      }
    }
  }
  return verdict;
}

enum class ExpanderMode { Exact, Sampled };

inline HalfExpanderVerdict is_half_expander(const SimpleGraph& g,
                                            const HalfExpanderParams& params,
                                            ExpanderMode mode, std::uint64_t samples = 0,
                                            Rng* rng = nullptr) {
  if (mode == ExpanderMode::Exact) return is_half_expander_exact(g, params);
  if (!rng) throw std::invalid_argument("sampled mode needs an RNG");
  return is_half_expander_sampled(g, params, samples, *rng);
}

// Empirical neighborhood/cut statistics over sampled vertex sets in the three
// size regimes of the random-graph expansion bounds (|X| <= n^2/m;
// 64 n^2/m <= |X| <= n/4 with an excluded set N; disjoint quarter-size
// pairs). A measurement harness, not a proof.
struct ExpansionStats {
  double min_neighborhood_ratio = 0.0;  // min |N(X)|/|X|, small regime
  std::size_t min_escape_edges = 0;     // min e(X, V \ (X u N)), middle regime
  std::size_t min_pair_edges = 0;       // min e(X,Y), quarter pairs
  std::uint64_t samples_small = 0, samples_mid = 0, samples_pair = 0;
  double bound_ratio = 0.0;             // m/8n, for reference
};

inline ExpansionStats expansion_stats(const SimpleGraph& g, Rng& rng, std::uint64_t samples) {
  const int n = g.n();
  const double m = static_cast<double>(g.num_edges());
  ExpansionStats stats;
  stats.bound_ratio = n > 0 ? m / (8.0 * n) : 0.0;
  if (n == 0) return stats;

  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> tag(n, 0);
  int stamp = 0;

  auto sample_prefix = [&](std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j = i + rng.below(n - i);
      std::swap(pool[i], pool[j]);
    }
  };

  const std::size_t small_hi =
      std::max<std::size_t>(1, std::min<double>(n, m > 0 ? n * double(n) / m : n));
  const std::size_t mid_lo = std::min<std::size_t>(
      n, std::max<std::size_t>(1, m > 0 ? std::ceil(64.0 * n * n / m) : 1));
  const std::size_t mid_hi = std::max<std::size_t>(mid_lo, n / 4);
  const std::size_t quarter = std::max<std::size_t>(1, n / 4);

  bool first_small = true, first_mid = true, first_pair = true;
  for (std::uint64_t s = 0; s < samples; ++s) {
    {  // small regime: neighborhood expansion ratio
      const std::size_t size = 1 + rng.below(small_hi);
      sample_prefix(size);
      ++stamp;
      for (std::size_t i = 0; i < size; ++i) tag[pool[i]] = stamp;
      std::size_t nb = 0;
      for (std::size_t i = 0; i < size; ++i)
        for (Vertex w : g.neighbors(pool[i]))
          if (tag[w] != stamp && tag[w] != -stamp) {
            tag[w] = -stamp;
            ++nb;
          }
      const double ratio = static_cast<double>(nb) / size;
      if (first_small || ratio < stats.min_neighborhood_ratio)
        stats.min_neighborhood_ratio = ratio;
      first_small = false;
      ++stats.samples_small;
    }
    if (mid_lo <= mid_hi && mid_lo <= static_cast<std::size_t>(n)) {
      // middle regime: edges escaping X u N for an excluded N of size <= n/2
      const std::size_t size = mid_lo + rng.below(mid_hi - mid_lo + 1);
      if (size + 1 <= static_cast<std::size_t>(n)) {
        sample_prefix(size);
        const std::size_t navail = n - size;
        const std::size_t nsize = rng.below(std::min<std::size_t>(navail, n / 2) + 1);
        for (std::size_t i = 0; i < nsize; ++i) {
          const std::size_t j = size + i + rng.below(n - size - i);
          std::swap(pool[size + i], pool[j]);
        }
        ++stamp;
        for (std::size_t i = 0; i < size; ++i) tag[pool[i]] = stamp;
        for (std::size_t i = size; i < size + nsize; ++i) tag[pool[i]] = -stamp;
        std::size_t escape = 0;
        for (std::size_t i = 0; i < size; ++i)
          for (Vertex w : g.neighbors(pool[i]))
            if (tag[w] != stamp && tag[w] != -stamp) ++escape;
        if (first_mid || escape < stats.min_escape_edges) stats.min_escape_edges = escape;
        first_mid = false;
        ++stats.samples_mid;
      }
    }
    if (2 * quarter <= static_cast<std::size_t>(n)) {
      // quarter pairs
      sample_prefix(2 * quarter);
      ++stamp;
      for (std::size_t i = quarter; i < 2 * quarter; ++i) tag[pool[i]] = stamp;
      std::size_t between = 0;
      for (std::size_t i = 0; i < quarter; ++i)
        for (Vertex w : g.neighbors(pool[i]))
          if (tag[w] == stamp) ++between;
      if (first_pair || between < stats.min_pair_edges) stats.min_pair_edges = between;
      first_pair = false;
      ++stats.samples_pair;
    }
  }
  return stats;
}

}  // namespace mbg
