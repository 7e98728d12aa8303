#pragma once

// Closed-form quantities around the cluster-size threshold: the critical size
// m*, the heights on either side of the (ln n)^(1/2) threshold, expected
// clique and edge counts, and the tail inequalities used to bound them.
//
// Products of many small probabilities are evaluated in log space with
// compensated summation.

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "numeric.hpp"
#include "tree.hpp"

namespace cga {

namespace detail {

inline void check_alpha(double alpha) {
  if (!(alpha > 0 && alpha <= 1)) throw std::domain_error("cga: alpha must lie in (0, 1]");
}
inline void check_bc(double b, double c) {
  if (!(b >= 2)) throw std::domain_error("cga: b must be >= 2");
  if (!(c > 1)) throw std::domain_error("cga: c must exceed 1");
}
inline double ln_n(const TreeParams& p) {
  return static_cast<double>(p.H()) * std::log(static_cast<double>(p.b()));
}
inline double log_choose(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace detail

/// m* = ln b / (alpha ln c): the critical cluster size.
inline double m_star(double alpha, std::uint64_t b, double c) {
  detail::check_alpha(alpha);
  detail::check_bc(static_cast<double>(b), c);
  return std::log(static_cast<double>(b)) / (alpha * std::log(c));
}

struct ThresholdHeights {
  double h_star;       // (1/2 - eps) ln ln n / ln b
  double h_epsilon;    // (1/2 + eps) ln ln n / ln b
  double tall_height;  // (ln n)^(1/2) / ln b
};

inline ThresholdHeights threshold_heights(const TreeParams& p, double epsilon) {
  if (p.n() < 3) throw std::domain_error("cga: threshold heights need n >= 3");
  if (!(epsilon >= 0)) throw std::domain_error("cga: epsilon must be non-negative");
  const double ln_b = std::log(static_cast<double>(p.b()));
  const double lnln = std::log(detail::ln_n(p));
  return {(0.5 - epsilon) * lnln / ln_b, (0.5 + epsilon) * lnln / ln_b,
          std::sqrt(detail::ln_n(p)) / ln_b};
}

/// gamma = (alpha ln c / (4 ln b)) * (b^h_min - m*) / b^h_min with h_min the
/// least integer h such that b^h > m*.
inline double gamma_constant(double alpha, std::uint64_t b, double c) {
  const double ms = m_star(alpha, b, c);
  double size = 1;
  while (!(size > ms)) size *= static_cast<double>(b);
  return alpha * std::log(c) / (4 * std::log(static_cast<double>(b))) * (size - ms) / size;
}

struct ThresholdConstants {
  double m_star;
  double h_star;
  double h_epsilon;
  double gamma;
  double epsilon;
};

inline ThresholdConstants threshold_constants(const TreeParams& p, double alpha, double epsilon) {
  const auto heights = threshold_heights(p, epsilon);
  return {m_star(alpha, p.b(), p.c()), heights.h_star, heights.h_epsilon,
          gamma_constant(alpha, p.b(), p.c()), epsilon};
}

/// (n / b^h) c^(-h b^(2h)): the simplified lower bound on the expected number
/// of complete height-h cliques.
inline LogValue clique_count_lower_bound(unsigned h, const TreeParams& p) {
  if (h > p.H()) throw std::domain_error("cga: h must lie in [0, H]");
  const double ln_b = std::log(static_cast<double>(p.b()));
  const double log_value = (static_cast<double>(p.H()) - h) * ln_b -
                           h * std::exp(2.0 * h * ln_b) * std::log(p.c());
  return from_log(log_value);
}

/// Probability that one fixed complete height-h set is a clique:
/// prod_j (c^-j)^pairs_at_height(j, h).
inline LogValue exact_clique_probability(unsigned h, const TreeParams& p) {
  if (h > p.H()) throw std::domain_error("cga: h must lie in [0, H]");
  CompensatedSum log_sum;
  for (unsigned j = 1; j <= h; ++j) {
    log_sum.add(-static_cast<double>(pairs_at_height(j, h, p)) * j * std::log(p.c()));
  }
  return from_log(log_sum.value());
}

/// min(family_size, (ln n)^((alpha ln c / (4 ln b)) (m - m*))): the number of
/// sets of size m guaranteed to also satisfy E3.
inline double cluster_count_guarantee(double m, const TreeParams& p, double alpha,
                                      double family_size) {
  const double ms = m_star(alpha, p.b(), p.c());
  if (!(m > ms)) throw std::domain_error("cga: the guarantee needs m > m*");
  const double exponent =
      alpha * std::log(p.c()) / (4 * std::log(static_cast<double>(p.b()))) * (m - ms);
  return std::min(family_size, std::pow(detail::ln_n(p), exponent));
}

/// (t/(t-1)) C(n,s) p^s (1-p)^(n-s) with s = ceil(t p n), bounding
/// Pr(Bin(n,p) >= t p n). Requires t > 1 and 1 <= s <= n-1.
inline double binom_tail_bound(std::uint64_t n, double prob, double t) {
  if (!(prob > 0 && prob < 1)) throw std::domain_error("cga: prob must lie in (0, 1)");
  if (!(t > 1)) throw std::domain_error("cga: t must exceed 1");
  double tpn = t * (prob * static_cast<double>(n));
  if (const double r = std::round(tpn); std::fabs(tpn - r) <= 1e-12 * std::max(1.0, r)) tpn = r;
  const double s = std::ceil(tpn);
  if (s < 1 || s > static_cast<double>(n) - 1) {
    throw std::domain_error("cga: s = ceil(t p n) must lie in [1, n-1]");
  }
  const double nd = static_cast<double>(n);
  const double log_bound = std::log(t / (t - 1)) + detail::log_choose(nd, s) + s * std::log(prob) +
                           (nd - s) * std::log1p(-prob);
  return std::exp(log_bound);
}

/// 2 exp(s (ln n + 1 - ln s + ln p)) bounding Pr(Bin(n,p) >= s) for s >= 2pn.
inline double binom_tail_simple(std::uint64_t n, double prob, double s) {
  if (!(prob > 0 && prob < 1)) throw std::domain_error("cga: prob must lie in (0, 1)");
  const double nd = static_cast<double>(n);
  if (!(s >= 2 * prob * nd) || !(s > 0)) throw std::domain_error("cga: needs s >= 2 p n");
  return 2 * std::exp(s * (std::log(nd) + 1 - std::log(s) + std::log(prob)));
}

/// 2 (n e p / s)^s, the intermediate form of binom_tail_simple.
inline double binom_tail_simple_intermediate(std::uint64_t n, double prob, double s) {
  if (!(prob > 0 && prob < 1)) throw std::domain_error("cga: prob must lie in (0, 1)");
  const double nd = static_cast<double>(n);
  if (!(s >= 2 * prob * nd) || !(s > 0)) throw std::domain_error("cga: needs s >= 2 p n");
  return 2 * std::pow(nd * std::exp(1.0) * prob / s, s);
}

struct JansonBounds {
  double upper;  // bounds Pr(X >= mu + t)
  double lower;  // bounds Pr(X <= mu - t)
};

/// Chernoff-type tails for a sum X of independent Bernoulli variables with
/// mean mu.
inline JansonBounds janson_bounds(double mu, double t) {
  if (!(mu > 0)) throw std::domain_error("cga: mu must be positive");
  if (!(t >= 0)) throw std::domain_error("cga: t must be non-negative");
  return {std::exp(-t * t / (2 * (mu + t / 3))), std::exp(-t * t / (2 * mu))};
}

/// E[X_S] for a complete height-h set S: sum_j pairs_at_height(j, h) c^-j.
inline double expected_internal_edges(unsigned h, const TreeParams& p) {
  if (h < 1 || h > p.H()) throw std::domain_error("cga: h must lie in [1, H]");
  CompensatedSum sum;
  for (unsigned j = 1; j <= h; ++j) {
    sum.add(static_cast<double>(pairs_at_height(j, h, p)) * std::pow(p.c(), -static_cast<double>(j)));
  }
  return sum.value();
}

/// exp(-(1/2) n^(1 - alpha m log_b c)): upper bound on the probability that a
/// fixed set of size m is externally sparse, from the argument for sizes
/// below m*.
inline double sparse_set_upper_bound(std::uint64_t n, double alpha, double m, std::uint64_t b,
                                     double c) {
  detail::check_alpha(alpha);
  detail::check_bc(static_cast<double>(b), c);
  const double log_b_c = std::log(c) / std::log(static_cast<double>(b));
  return std::exp(-0.5 * std::pow(static_cast<double>(n), 1 - alpha * m * log_b_c));
}

/// (4 alpha m (1 + ln c) - ln(c^(alpha m) - b)) / (alpha m ln c - ln b): the
/// height beyond which the E2 tail sum drops below 1/2. Diagnostic only;
/// needs c^(alpha m) > b, i.e. m > m*.
inline double e2_height_threshold(double m, double alpha, std::uint64_t b, double c) {
  detail::check_alpha(alpha);
  detail::check_bc(static_cast<double>(b), c);
  const double am = alpha * m;
  const double bd = static_cast<double>(b);
  if (!(std::pow(c, am) > bd)) throw std::domain_error("cga: needs c^(alpha m) > b");
  return (4 * am * (1 + std::log(c)) - std::log(std::pow(c, am) - bd)) /
         (am * std::log(c) - std::log(bd));
}

}  // namespace cga
