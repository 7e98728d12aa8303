#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tree.hpp"

namespace cga {

/// An undirected edge {u, v} (stored with u < v) or a directed arc u -> v.
struct Edge {
  LeafId u;
  LeafId v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable CGA graph over the leaves of a TreeParams tree, stored as
/// compressed sorted adjacency. Directed graphs keep both out- and
/// in-adjacency; for undirected graphs the two coincide.
class Graph {
 public:
  /// Builds a graph from an edge (or arc) list in any order. Undirected
  /// edges may be given in either orientation. Self-loops, duplicates and
  /// out-of-range endpoints are rejected.
  Graph(TreeParams params, bool directed, std::uint64_t seed, std::vector<Edge> edges)
      : params_(std::move(params)), directed_(directed), seed_(seed) {
    for (auto& e : edges) {
      check_leaf(e.u, params_);
      check_leaf(e.v, params_);
      if (e.u == e.v) throw std::invalid_argument("cga: self-loop at vertex " + std::to_string(e.u));
      if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
      throw std::invalid_argument("cga: duplicate edge " + std::to_string(dup->u) + " " +
                                  std::to_string(dup->v));
    }
    edge_count_ = edges.size();
    const std::uint64_t n = params_.n();
    build(out_offsets_, out_targets_, n, edges, !directed_, false);
    if (directed_) build(in_offsets_, in_targets_, n, edges, false, true);
  }

  const TreeParams& params() const noexcept { return params_; }
  bool directed() const noexcept { return directed_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  std::uint64_t vertex_count() const noexcept { return params_.n(); }

  /// Sorted neighbors of v (out-neighbors when directed).
  std::span<const LeafId> neighbors(LeafId v) const {
    check_leaf(v, params_);
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }

  /// Sorted in-neighbors of v; equal to neighbors(v) when undirected.
  std::span<const LeafId> in_neighbors(LeafId v) const {
    if (!directed_) return neighbors(v);
    check_leaf(v, params_);
    return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
  }

  std::uint64_t degree(LeafId v) const { return neighbors(v).size(); }

  bool has_edge(LeafId u, LeafId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Canonical sorted edge list: u < v when undirected.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (LeafId u = 0; u < params_.n(); ++u) {
      for (LeafId v : neighbors(u)) {
        if (directed_ || u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.params_ == b.params_ && a.directed_ == b.directed_ && a.seed_ == b.seed_ &&
           a.edge_count_ == b.edge_count_ && a.out_offsets_ == b.out_offsets_ &&
           a.out_targets_ == b.out_targets_;
  }

 private:
  static void build(std::vector<std::uint64_t>& offsets, std::vector<LeafId>& targets,
                    std::uint64_t n, const std::vector<Edge>& edges, bool symmetric,
                    bool reversed) {
    offsets.assign(n + 1, 0);
    for (const auto& e : edges) {
      ++offsets[(reversed ? e.v : e.u) + 1];
      if (symmetric) ++offsets[e.v + 1];
    }
    for (std::uint64_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(offsets[n]);
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& e : edges) {
      if (reversed) {
        targets[cursor[e.v]++] = e.u;
      } else {
        targets[cursor[e.u]++] = e.v;
        if (symmetric) targets[cursor[e.v]++] = e.u;
      }
    }
    for (std::uint64_t i = 0; i < n; ++i) {
      std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                targets.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
    }
  }

  TreeParams params_;
  bool directed_;
  std::uint64_t seed_;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> out_offsets_;
  std::vector<LeafId> out_targets_;
  std::vector<std::uint64_t> in_offsets_;
  std::vector<LeafId> in_targets_;
};

}  // namespace cga
