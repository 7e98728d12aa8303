#pragma once

// Sampling of CGA graphs.
//
// The batched sampler visits every height class j = 1..H and every complete
// height-j block. Inside a block the pairs at height exactly j are the pairs
// whose endpoints fall in different child subtrees; there are
// pairs_at_height(j, j) of them (twice that many ordered pairs in the
// directed model), each present independently with probability c^-j. The
// sampler draws the number of present pairs from Binomial(P, c^-j) and then
// places them on a uniformly random subset of the P pair ranks with a partial
// Fisher-Yates shuffle over the implicit rank <-> pair bijection. This is
// equal in distribution to flipping one coin per pair and costs time in the
// number of blocks plus the number of edges produced.
//
// Each (height class, block) pair draws from its own stream
// stream_key(seed, j, block), so the output does not depend on how blocks are
// split across threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <unordered_map>
#include <vector>

#include <boost/random/binomial_distribution.hpp>

#include "graph.hpp"
#include "numeric.hpp"
#include "rng.hpp"
#include "tree.hpp"

namespace cga {

/// c^-h(u,v).
inline double edge_probability(LeafId u, LeafId v, const TreeParams& p) {
  return std::pow(p.c(), -static_cast<double>(pair_height(u, v, p)));
}

/// Expected number of edges (arcs when directed) of a sampled graph.
inline double expected_edge_count(const TreeParams& p, bool directed = false) {
  const double b = static_cast<double>(p.b());
  CompensatedSum sum;
  for (unsigned j = 1; j <= p.H(); ++j) {
    const double blocks = static_cast<double>(p.n() / p.block_size(j));
    const double pairs = b * (b - 1) / 2 * std::pow(b, 2.0 * (j - 1));
    sum.add(blocks * pairs * std::pow(p.c(), -static_cast<double>(j)));
  }
  return directed ? 2 * sum.value() : sum.value();
}

namespace detail {

/// Maps rank r in [0, P) of the height-j pairs of the block starting at
/// `root` to its (u, v) pair. Ranks enumerate child-subtree pairs first, then
/// the leaf offset inside each child.
struct PairRanking {
  std::uint64_t b;
  std::uint64_t child_width;  // b^(j-1)
  bool ordered;

  std::uint64_t child_pairs() const noexcept { return ordered ? b * (b - 1) : b * (b - 1) / 2; }
  std::uint64_t count() const {
    return checked_mul(child_pairs(), checked_mul(child_width, child_width));
  }

  Edge unrank(LeafId root, std::uint64_t rank) const noexcept {
    const std::uint64_t cell = child_width * child_width;
    std::uint64_t pair_index = rank / cell;
    const std::uint64_t within = rank % cell;
    std::uint64_t ci = 0, cj = 0;
    if (ordered) {
      ci = pair_index / (b - 1);
      const std::uint64_t r = pair_index % (b - 1);
      cj = r < ci ? r : r + 1;
    } else {
      while (pair_index >= b - 1 - ci) {
        pair_index -= b - 1 - ci;
        ++ci;
      }
      cj = ci + 1 + pair_index;
    }
    return {root + ci * child_width + within / child_width,
            root + cj * child_width + within % child_width};
  }
};

/// Appends k distinct uniform ranks from [0, P) (partial Fisher-Yates over a
/// virtual identity array; only displaced slots are stored).
inline void sample_distinct_ranks(std::uint64_t population, std::uint64_t k, Xoshiro256& rng,
                                  std::vector<std::uint64_t>& out) {
  if (k == population) {
    for (std::uint64_t i = 0; i < population; ++i) out.push_back(i);
    return;
  }
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  displaced.reserve(2 * k);
  auto slot = [&](std::uint64_t i) {
    auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t r = i + rng.below(population - i);
    const std::uint64_t picked = slot(r);
    displaced[r] = slot(i);
    out.push_back(picked);
  }
}

struct HeightClass {
  unsigned j;
  std::uint64_t blocks;
  std::uint64_t block_width;
  PairRanking ranking;
  boost::random::binomial_distribution<std::int64_t, double> count_dist;
};

}  // namespace detail

/// Samples a CGA graph with the batched per-height sampler. Identical
/// (params, seed, directed) give identical graphs for every thread count.
inline Graph sample_graph(const TreeParams& p, std::uint64_t seed, bool directed,
                          unsigned threads = 1) {
  std::vector<detail::HeightClass> classes;
  std::vector<std::uint64_t> class_start;  // prefix sums of block counts
  std::uint64_t total_units = 0;
  for (unsigned j = 1; j <= p.H(); ++j) {
    detail::PairRanking ranking{p.b(), p.block_size(j - 1), directed};
    const auto population = static_cast<std::int64_t>(ranking.count());
    const double prob = std::pow(p.c(), -static_cast<double>(j));
    class_start.push_back(total_units);
    classes.push_back({j, p.n() / p.block_size(j), p.block_size(j), ranking,
                       boost::random::binomial_distribution<std::int64_t, double>(population, prob)});
    total_units += classes.back().blocks;
  }

  auto run_units = [&](std::uint64_t first, std::uint64_t last, std::vector<Edge>& out) {
    std::vector<std::uint64_t> ranks;
    auto cls = std::upper_bound(class_start.begin(), class_start.end(), first) - class_start.begin() - 1;
    for (std::uint64_t unit = first; unit < last; ++unit) {
      while (static_cast<std::size_t>(cls + 1) < class_start.size() && unit >= class_start[cls + 1]) ++cls;
      const auto& hc = classes[static_cast<std::size_t>(cls)];
      const std::uint64_t block = unit - class_start[static_cast<std::size_t>(cls)];
      Xoshiro256 rng(stream_key(seed, hc.j, block));
      const auto k = static_cast<std::uint64_t>(hc.count_dist(rng));
      if (k == 0) continue;
      ranks.clear();
      detail::sample_distinct_ranks(hc.ranking.count(), k, rng, ranks);
      const LeafId root = block * hc.block_width;
      for (std::uint64_t r : ranks) out.push_back(hc.ranking.unrank(root, r));
    }
  };

  std::vector<Edge> edges;
  threads = std::max(1u, threads);
  if (threads == 1 || total_units < 2) {
    run_units(0, total_units, edges);
  } else {
    const std::uint64_t workers = std::min<std::uint64_t>(threads, total_units);
    std::vector<std::vector<Edge>> parts(workers);
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = total_units * w / workers;
      const std::uint64_t last = total_units * (w + 1) / workers;
      pool.emplace_back([&, first, last, w] { run_units(first, last, parts[w]); });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());
  }
  return Graph(p, directed, seed, std::move(edges));
}

/// Reference sampler: one coin flip per pair (ordered pair when directed),
/// all from the single stream stream_key(seed, ~0, 0). Quadratic in n; for
/// cross-checking the batched sampler on small trees.
inline Graph sample_graph_naive(const TreeParams& p, std::uint64_t seed, bool directed) {
  Xoshiro256 rng(stream_key(seed, ~std::uint64_t{0}, 0));
  std::vector<double> prob(p.H() + 1);
  for (unsigned j = 1; j <= p.H(); ++j) prob[j] = std::pow(p.c(), -static_cast<double>(j));
  std::vector<Edge> edges;
  for (LeafId u = 0; u < p.n(); ++u) {
    for (LeafId v = directed ? 0 : u + 1; v < p.n(); ++v) {
      if (u == v) continue;
      if (rng.uniform() < prob[pair_height(u, v, p)]) edges.push_back({u, v});
    }
  }
  return Graph(p, directed, seed, std::move(edges));
}

}  // namespace cga
