#pragma once

// Exact (alpha, beta)-cluster verification.
//
// e(v, M) counts the edges between v and M (undirected) or the arcs from v
// into M (directed-out mode). M is internally dense when every member has
// e(v, M) >= beta |M| and externally sparse when every non-member has
// e(u, M) <= alpha |M|. |M| includes v itself, so a singleton is never dense
// for beta > 0. Requiring beta >= 1/2 would force clusters to be connected;
// nothing here enforces that, or alpha <= beta.
//
// The thresholds are exact rationals so boundary cases compare exactly.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"
#include "tree.hpp"

namespace cga {

enum class EdgeMode { undirected, directed_out };

inline const char* to_string(EdgeMode m) noexcept {
  return m == EdgeMode::undirected ? "undirected" : "directed-out";
}

struct ClusterSpec {
  Rational alpha;
  Rational beta;
  EdgeMode mode = EdgeMode::undirected;

  static ClusterSpec make(Rational alpha, Rational beta, EdgeMode mode = EdgeMode::undirected) {
    auto in_unit = [](const Rational& r) { return r.num() > 0 && r.num() <= r.den(); };
    if (!in_unit(alpha)) throw std::domain_error("cga: alpha must lie in (0, 1]");
    if (!in_unit(beta)) throw std::domain_error("cga: beta must lie in (0, 1]");
    return {alpha, beta, mode};
  }
  static ClusterSpec parse(std::string_view alpha, std::string_view beta,
                           EdgeMode mode = EdgeMode::undirected) {
    return make(Rational::parse(alpha), Rational::parse(beta), mode);
  }
  static ClusterSpec from_doubles(double alpha, double beta, EdgeMode mode = EdgeMode::undirected) {
    return make(Rational::from_double(alpha), Rational::from_double(beta), mode);
  }
};

inline void check_mode(const Graph& g, EdgeMode mode) {
  if (g.directed() && mode != EdgeMode::directed_out) {
    throw std::domain_error("cga: directed graphs are verified in directed-out mode");
  }
}

namespace detail {

inline std::uint64_t count_in_set(std::span<const LeafId> sorted, const VertexSet& m) {
  if (m.is_complete()) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), m.root());
    const auto hi = std::lower_bound(lo, sorted.end(), m.root() + m.size());
    return static_cast<std::uint64_t>(hi - lo);
  }
  const auto members = m.members();
  // Probe the shorter list into the longer one.
  const auto& small = sorted.size() <= members.size() ? sorted : members;
  const auto& large = sorted.size() <= members.size() ? members : sorted;
  std::uint64_t count = 0;
  auto cursor = large.begin();
  for (LeafId x : small) {
    cursor = std::lower_bound(cursor, large.end(), x);
    if (cursor == large.end()) break;
    if (*cursor == x) ++count;
  }
  return count;
}

}  // namespace detail

/// e(v, M): neighbors (out-neighbors in directed-out mode) of v inside M.
inline std::uint64_t edges_to_set(LeafId v, const VertexSet& m, const Graph& g,
                                  EdgeMode mode = EdgeMode::undirected) {
  check_mode(g, mode);
  if (m.empty()) throw std::domain_error("cga: edges_to_set needs a nonempty set");
  return detail::count_in_set(g.neighbors(v), m);
}

/// A vertex that violates a property, with its edge count into M.
struct Witness {
  LeafId vertex;
  std::uint64_t edges;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// e(u, M) for every u outside M with at least one edge (arc) into M, sorted
/// by u. Vertices absent from the list have e(u, M) = 0.
inline std::vector<Witness> external_counts(const VertexSet& m, const Graph& g, EdgeMode mode) {
  check_mode(g, mode);
  std::vector<LeafId> sources;
  for (LeafId v : m.members()) {
    for (LeafId u : g.in_neighbors(v)) {
      if (!m.contains(u)) sources.push_back(u);
    }
  }
  std::sort(sources.begin(), sources.end());
  std::vector<Witness> out;
  for (std::size_t i = 0; i < sources.size();) {
    std::size_t j = i;
    while (j < sources.size() && sources[j] == sources[i]) ++j;
    out.push_back({sources[i], j - i});
    i = j;
  }
  return out;
}

/// First member v with e(v, M) < beta |M|, if any.
inline std::optional<Witness> density_violation(const VertexSet& m, const Graph& g,
                                                const ClusterSpec& s) {
  if (m.empty()) throw std::domain_error("cga: density needs a nonempty set");
  check_mode(g, s.mode);
  for (LeafId v : m.members()) {
    const std::uint64_t e = detail::count_in_set(g.neighbors(v), m);
    if (s.beta.compare_count(e, m.size()) < 0) return Witness{v, e};
  }
  return std::nullopt;
}

inline bool is_internally_dense(const VertexSet& m, const Graph& g, const ClusterSpec& s) {
  return !density_violation(m, g, s).has_value();
}

inline bool is_externally_sparse(const VertexSet& m, const Graph& g, const ClusterSpec& s) {
  if (m.empty()) throw std::domain_error("cga: sparseness needs a nonempty set");
  for (const Witness& w : external_counts(m, g, s.mode)) {
    if (s.alpha.compare_count(w.edges, m.size()) > 0) return false;
  }
  return true;
}

inline bool is_cluster(const VertexSet& m, const Graph& g, const ClusterSpec& s) {
  return is_internally_dense(m, g, s) && is_externally_sparse(m, g, s);
}

/// Event D and the split of external sparseness into the regions
/// E1: S(M) \ M, E2: S(M, h*) \ S(M), E3: V \ S(M, h*).
struct EventReport {
  bool dense = false;
  bool e1 = false;
  bool e2 = false;
  bool e3 = false;
  unsigned h_star_used = 0;
  std::optional<Witness> dense_witness;
  std::optional<Witness> e1_witness;
  std::optional<Witness> e2_witness;
  std::optional<Witness> e3_witness;

  bool externally_sparse() const noexcept { return e1 && e2 && e3; }
  bool cluster() const noexcept { return dense && externally_sparse(); }
};

inline EventReport event_report(const VertexSet& m, const Graph& g, const ClusterSpec& s,
                                unsigned h_star) {
  const TreeParams& p = g.params();
  const unsigned h = set_height(m, p);
  if (h_star < h || h_star > p.H()) {
    throw std::domain_error("cga: h_star must lie in [set_height(M), H]");
  }
  EventReport r;
  r.h_star_used = h_star;
  r.dense_witness = density_violation(m, g, s);
  r.dense = !r.dense_witness;
  const LeafRange own = enclosing_range(m, h, p);
  const LeafRange outer = enclosing_range(m, h_star, p);
  for (const Witness& w : external_counts(m, g, s.mode)) {
    if (s.alpha.compare_count(w.edges, m.size()) <= 0) continue;
    auto& slot = own.contains(w.vertex) ? r.e1_witness
                 : outer.contains(w.vertex) ? r.e2_witness
                                            : r.e3_witness;
    if (!slot) slot = w;
  }
  r.e1 = !r.e1_witness;
  r.e2 = !r.e2_witness;
  r.e3 = !r.e3_witness;
  return r;
}

enum class ThickClass { short_thick, tall_thick, neither };

inline const char* to_string(ThickClass t) noexcept {
  switch (t) {
    case ThickClass::short_thick: return "short-thick";
    case ThickClass::tall_thick: return "tall-thick";
    default: return "neither";
  }
}

/// Short eps-thick: height <= (1/2+eps) ln ln n / ln b and |M| >= (ln n)^(1/2+eps/3).
/// Tall eps-thick: height <= (ln n)^(1/2) / ln b and |M| >= (ln n)^(1/2+eps/2).
/// Thresholds stay real-valued; integer heights are compared against them.
inline ThickClass classify_thick(const VertexSet& m, const TreeParams& p, double epsilon) {
  if (p.n() < 3) throw std::domain_error("cga: thick sets need n >= 3");
  if (!(epsilon > 0)) throw std::domain_error("cga: epsilon must be positive");
  const double ln_n = static_cast<double>(p.H()) * std::log(static_cast<double>(p.b()));
  const double ln_b = std::log(static_cast<double>(p.b()));
  const double height = m.empty() ? 0.0 : static_cast<double>(m.height());
  const double size = static_cast<double>(m.size());
  const double short_height = (0.5 + epsilon) * std::log(ln_n) / ln_b;
  if (height <= short_height && size >= std::pow(ln_n, 0.5 + epsilon / 3)) {
    return ThickClass::short_thick;
  }
  const double tall_height = std::sqrt(ln_n) / ln_b;
  if (height <= tall_height && size >= std::pow(ln_n, 0.5 + epsilon / 2)) {
    return ThickClass::tall_thick;
  }
  return ThickClass::neither;
}

/// X_S: edges with both endpoints in S (arcs counted once).
inline std::uint64_t internal_edge_count(const VertexSet& s, const Graph& g) {
  if (s.empty()) return 0;
  std::uint64_t total = 0;
  for (LeafId v : s.members()) total += detail::count_in_set(g.neighbors(v), s);
  return g.directed() ? total : total / 2;
}

/// {v in M : e(v, M) <= fraction |M|}.
inline VertexSet sparse_core(const VertexSet& m, const Graph& g, double fraction) {
  const double limit = fraction * static_cast<double>(m.size());
  std::vector<LeafId> kept;
  for (LeafId v : m.members()) {
    if (static_cast<double>(detail::count_in_set(g.neighbors(v), m)) <= limit) kept.push_back(v);
  }
  return VertexSet::from_members(std::move(kept), g.params());
}

}  // namespace cga
