#pragma once

// Ground-truth cluster enumeration by exhaustive search.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluster.hpp"

namespace cga {

inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000;

/// An exhaustive search would exceed its work budget. Carries the estimate.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t cost, std::uint64_t budget, const std::string& what)
      : std::runtime_error(what + ": estimated " + std::to_string(cost) +
                           " elementary checks exceeds budget " + std::to_string(budget)),
        cost_(cost),
        budget_(budget) {}
  std::uint64_t cost() const noexcept { return cost_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t cost_;
  std::uint64_t budget_;
};

struct ClusterEntry {
  VertexSet set;
  bool complete;
};

struct ClusterList {
  std::vector<ClusterEntry> clusters;
  std::string search_space;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? std::numeric_limits<std::uint64_t>::max() : out;
}

/// C(n, k), saturating at the maximum of uint64.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace detail

/// Work estimate C(n, max_size) * max_size * n used by the budget guard.
inline std::uint64_t enumeration_cost(std::uint64_t n, std::uint64_t max_size) noexcept {
  using detail::saturating_mul;
  return saturating_mul(saturating_mul(detail::binomial_saturating(n, max_size), max_size), n);
}

/// Every set of size 1..max_size that is an (alpha, beta)-cluster, in
/// lexicographic order of sorted member lists. Refuses (BudgetExceeded)
/// rather than returning a partial answer.
inline ClusterList enumerate_clusters(const Graph& g, const ClusterSpec& s, std::uint64_t max_size,
                                      std::uint64_t budget = kDefaultWorkBudget) {
  check_mode(g, s.mode);
  const TreeParams& p = g.params();
  const std::uint64_t n = p.n();
  max_size = std::min(max_size, n);
  const std::uint64_t cost = enumeration_cost(n, max_size);
  if (cost > budget) throw BudgetExceeded(cost, budget, "enumerate_clusters");

  ClusterList out;
  out.search_space = "all subsets of size 1.." + std::to_string(max_size);
  // Per exact size: no pruning across sizes, since density depends on |M|.
  for (std::uint64_t k = 1; k <= max_size; ++k) {
    std::vector<LeafId> combo(k);
    for (std::uint64_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      VertexSet m = VertexSet::from_members(combo, p);
      if (is_cluster(m, g, s)) {
        const bool complete = m.is_complete();
        out.clusters.push_back({std::move(m), complete});
      }
      // Next combination in lexicographic order.
      std::uint64_t i = k;
      while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::uint64_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const ClusterEntry& a, const ClusterEntry& b) { return a.set < b.set; });
  return out;
}

/// The complete height-h sets that are clusters, left to right.
inline ClusterList enumerate_complete_clusters(const Graph& g, const ClusterSpec& s, unsigned h) {
  const TreeParams& p = g.params();
  if (h > p.H()) throw std::domain_error("cga: height must lie in [0, H]");
  ClusterList out;
  out.search_space = "complete sets of height " + std::to_string(h);
  const std::uint64_t width = p.block_size(h);
  for (LeafId root = 0; root < p.n(); root += width) {
    VertexSet m = VertexSet::complete(root, h, p);
    if (is_cluster(m, g, s)) out.clusters.push_back({std::move(m), true});
  }
  return out;
}

}  // namespace cga
