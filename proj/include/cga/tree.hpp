#pragma once

// Exact combinatorics of the complete b-ary tree whose leaves are the
// vertices of a CGA graph.
//
// Leaves are labeled 0..n-1 in left-to-right order, so leaf i is the base-b
// digit string of i (most significant digit = topmost branch) and every
// complete subtree is a contiguous index range. All arithmetic here is exact
// integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cga {

using LeafId = std::uint64_t;

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("cga: integer overflow in tree arithmetic");
  }
  return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace detail

/// Parameters of the CGA model: fan-out b, tree height H, shrinking
/// parameter c. The leaf count n = b^H is derived exactly.
class TreeParams {
 public:
  TreeParams(std::uint64_t b, unsigned H, double c) : b_(b), H_(H), c_(c) {
    if (b < 2) throw std::domain_error("cga: fan-out b must be >= 2");
    if (H < 1) throw std::domain_error("cga: tree height H must be >= 1");
    if (!(c > 1.0) || c == std::numeric_limits<double>::infinity()) {
      throw std::domain_error("cga: shrinking parameter c must be a finite value > 1");
    }
    try {
      n_ = detail::checked_pow(b, H);
    } catch (const std::overflow_error&) {
      throw std::domain_error("cga: n = b^H does not fit in 64 bits");
    }
    block_sizes_.resize(H + 1);
    for (unsigned h = 0; h <= H; ++h) block_sizes_[h] = detail::checked_pow(b, h);
  }

  std::uint64_t b() const noexcept { return b_; }
  unsigned H() const noexcept { return H_; }
  double c() const noexcept { return c_; }
  std::uint64_t n() const noexcept { return n_; }

  /// Number of leaves in a complete subtree of height h (b^h), 0 <= h <= H.
  std::uint64_t block_size(unsigned h) const {
    if (h > H_) throw std::domain_error("cga: height exceeds tree height");
    return block_sizes_[h];
  }

  bool operator==(const TreeParams& o) const noexcept {
    return b_ == o.b_ && H_ == o.H_ && c_ == o.c_;
  }

 private:
  std::uint64_t b_;
  unsigned H_;
  double c_;
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> block_sizes_;
};

inline void check_leaf(LeafId v, const TreeParams& p) {
  if (v >= p.n()) {
    throw std::domain_error("cga: leaf index " + std::to_string(v) + " out of range [0, " +
                            std::to_string(p.n()) + ")");
  }
}

/// h(u,v): height of the smallest subtree containing both leaves, i.e. H minus
/// the length of the common base-b prefix. Defined only for distinct leaves.
inline unsigned pair_height(LeafId u, LeafId v, const TreeParams& p) {
  check_leaf(u, p);
  check_leaf(v, p);
  if (u == v) throw std::domain_error("cga: pair height is undefined for u == v");
  unsigned h = 0;
  while (u != v) {
    u /= p.b();
    v /= p.b();
    ++h;
  }
  return h;
}

/// A set of leaves with its height and the leftmost leaf of its minimal
/// complete subtree S(M) cached. Members are sorted and distinct.
class VertexSet {
 public:
  VertexSet() = default;

  static VertexSet from_members(std::vector<LeafId> members, const TreeParams& p) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw std::domain_error("cga: vertex set contains duplicate members");
    }
    for (LeafId v : members) check_leaf(v, p);
    VertexSet s;
    s.members_ = std::move(members);
    if (s.members_.size() >= 2) {
      // Subtrees are contiguous in leaf order, so the extreme pair spans S(M).
      s.height_ = pair_height(s.members_.front(), s.members_.back(), p);
    }
    if (!s.members_.empty()) {
      const std::uint64_t width = p.block_size(s.height_);
      s.root_ = s.members_.front() / width * width;
      s.width_ = width;
    }
    return s;
  }

  /// All b^height leaves of the complete subtree starting at `root`.
  static VertexSet complete(LeafId root, unsigned height, const TreeParams& p) {
    const std::uint64_t width = p.block_size(height);
    check_leaf(root, p);
    if (root % width != 0) {
      throw std::domain_error("cga: complete set root must be a multiple of b^height");
    }
    VertexSet s;
    s.members_.resize(width);
    for (std::uint64_t i = 0; i < width; ++i) s.members_[i] = root + i;
    s.height_ = height;
    s.root_ = root;
    s.width_ = width;
    return s;
  }

  std::span<const LeafId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  unsigned height() const noexcept { return height_; }
  LeafId root() const noexcept { return root_; }

  /// Width of S(M), b^height.
  std::uint64_t span_width() const noexcept { return width_; }

  /// True when the set is all of S(M).
  bool is_complete() const noexcept { return !empty() && members_.size() == span_width(); }

  bool contains(LeafId v) const noexcept {
    if (is_complete()) return v >= root_ && v - root_ < members_.size();
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.members_ == b.members_;
  }
  friend bool operator<(const VertexSet& a, const VertexSet& b) noexcept {
    return a.members_ < b.members_;
  }

 private:
  std::vector<LeafId> members_;
  unsigned height_ = 0;
  LeafId root_ = 0;
  std::uint64_t width_ = 1;
};

/// Height of the minimal complete subtree containing M; 0 for singletons.
inline unsigned set_height(const VertexSet& m, const TreeParams& /*p*/) {
  if (m.empty()) throw std::domain_error("cga: set height is undefined for the empty set");
  return m.height();
}

/// S(M, h'): the unique complete set of height h' containing M.
inline VertexSet enclosing_complete_set(const VertexSet& m, unsigned h_prime,
                                        const TreeParams& p) {
  const unsigned h = set_height(m, p);
  if (h_prime < h || h_prime > p.H()) {
    throw std::domain_error("cga: enclosing height must lie in [set_height(M), H]");
  }
  const std::uint64_t width = p.block_size(h_prime);
  return VertexSet::complete(m.root() / width * width, h_prime, p);
}

/// Half-open leaf range [first, last) of S(M, h').
struct LeafRange {
  LeafId first;
  LeafId last;
  bool contains(LeafId v) const noexcept { return v >= first && v < last; }
  std::uint64_t size() const noexcept { return last - first; }
};

inline LeafRange enclosing_range(const VertexSet& m, unsigned h_prime, const TreeParams& p) {
  const unsigned h = set_height(m, p);
  if (h_prime < h || h_prime > p.H()) {
    throw std::domain_error("cga: enclosing height must lie in [set_height(M), H]");
  }
  const std::uint64_t width = p.block_size(h_prime);
  const LeafId first = m.root() / width * width;
  return {first, first + width};
}

/// h(u, M): the common height between u and every member of S(M).
inline unsigned height_from_set(LeafId u, const VertexSet& m, const TreeParams& p) {
  check_leaf(u, p);
  const LeafRange s = enclosing_range(m, set_height(m, p), p);
  if (s.contains(u)) throw std::domain_error("cga: u lies inside S(M)");
  return pair_height(u, s.first, p);
}

/// Number of unordered leaf pairs at height exactly j inside one complete set
/// of height h: b^(h-j) * C(b,2) * b^(2(j-1)).
inline std::uint64_t pairs_at_height(unsigned j, unsigned h, const TreeParams& p) {
  if (j < 1 || j > h || h > p.H()) {
    throw std::domain_error("cga: pairs_at_height requires 1 <= j <= h <= H");
  }
  using detail::checked_mul;
  using detail::checked_pow;
  const std::uint64_t b = p.b();
  const std::uint64_t choose_b = b * (b - 1) / 2;
  return checked_mul(checked_mul(checked_pow(b, h - j), choose_b), checked_pow(b, 2 * (j - 1)));
}

}  // namespace cga
