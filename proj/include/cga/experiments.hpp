#pragma once

// Monte Carlo harness: samples CGA graphs over a range of tree heights and
// tallies cliques, dense complete sets, complete clusters, the D/E1/E2/E3
// events and internal edge counts, for comparison with the closed forms in
// bounds.hpp.
//
// Trial i of every sweep uses the graph seed trial_seed(master, i). Trials run
// in parallel; reports are ordered by (H, trial) before they are emitted, so
// output does not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "cluster.hpp"
#include "generator.hpp"
#include "numeric.hpp"
#include "rng.hpp"
#include "search.hpp"

namespace cga {

inline constexpr std::uint64_t kDefaultMaxVertices = std::uint64_t{1} << 22;

struct Measurements {
  bool cliques = true;
  bool dense = true;
  bool clusters = true;
  bool events = true;
  bool xs = true;
};

/// How estimate_event_probs places its test set inside each block.
enum class Placement {
  complete,  // the first complete height-h subtree (requires m = b^h)
  spread,    // m evenly spaced leaves of the first height-h subtree
  random,    // m uniform leaves of the first height-h subtree, resampled until the height is h
};

inline const char* to_string(Placement p) noexcept {
  switch (p) {
    case Placement::complete: return "complete";
    case Placement::spread: return "spread";
    default: return "random";
  }
}

struct ExperimentConfig {
  std::uint64_t b = 2;
  double c = 2;
  unsigned H_from = 10;
  unsigned H_to = 10;
  ClusterSpec spec = ClusterSpec::make(Rational(1, 2), Rational(1, 2));
  std::optional<double> epsilon;  // default min(0.1, ln c / (8 ln b))
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<unsigned> heights = {2};
  Measurements measure;
  std::optional<unsigned> h_star;  // integer h* for the E2/E3 split
  std::uint64_t max_n = kDefaultMaxVertices;
  std::uint64_t work_budget = kDefaultWorkBudget;
  bool timing = false;

  // estimate_event_probs
  unsigned event_height = 1;
  std::uint64_t event_size = 2;
  Placement placement = Placement::spread;

  // trend_sparse_below_mstar
  std::uint64_t trend_size = 1;
  std::uint64_t trend_random_sets = 1000;
  std::uint64_t trend_exhaustive_limit = 1'000'000;

  bool directed() const noexcept { return spec.mode == EdgeMode::directed_out; }

  double resolved_epsilon() const {
    if (epsilon) return *epsilon;
    return std::min(0.1, std::log(c) / (8 * std::log(static_cast<double>(b))));
  }

  TreeParams params(unsigned H) const { return TreeParams(b, H, c); }

  void validate() const {
    if (trials < 1) throw std::domain_error("cga: trials must be >= 1");
    if (H_from < 1 || H_from > H_to) throw std::domain_error("cga: need 1 <= H_from <= H_to");
    if (!(resolved_epsilon() > 0)) throw std::domain_error("cga: epsilon must be positive");
    for (unsigned H = H_from; H <= H_to; ++H) {
      const TreeParams p = params(H);
      if (p.n() > max_n) {
        throw BudgetExceeded(p.n(), max_n,
                             "n = " + std::to_string(p.n()) + " at H=" + std::to_string(H) +
                                 " exceeds the vertex cap (raise max_n to override)");
      }
    }
  }

  /// Integer h* used for the E2/E3 split of height-h sets in a height-H tree:
  /// the configured value, else floor of the real h*, raised to at least h
  /// and capped at H.
  unsigned resolved_h_star(unsigned h, unsigned H) const {
    unsigned value = 0;
    if (h_star) {
      value = *h_star;
    } else {
      const double real = threshold_heights(params(H), resolved_epsilon()).h_star;
      value = real > 0 ? static_cast<unsigned>(std::floor(real)) : 0;
    }
    return std::min(std::max(value, h), H);
  }
};

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::uint64_t count, unsigned threads,
                         const std::function<void(std::uint64_t)>& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < std::min<std::uint64_t>(threads, count); ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct EventTally {
  unsigned h_star_used = 0;
  std::uint64_t d = 0;
  std::uint64_t e1 = 0;
  std::uint64_t e2 = 0;
  std::uint64_t e3 = 0;
  std::uint64_t all = 0;  // D and E1 and E2 and E3
};

/// Measurements over the n / b^h complete height-h sets of one trial.
struct HeightTally {
  unsigned h = 0;
  std::uint64_t sets = 0;
  std::optional<std::uint64_t> cliques;
  std::optional<std::uint64_t> dense_complete;
  std::optional<std::uint64_t> complete_clusters;
  std::optional<EventTally> events;
  std::optional<double> xs_mean;
  std::optional<double> xs_variance;
};

struct TrialReport {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  unsigned H = 0;
  std::uint64_t n = 0;
  std::uint64_t edges = 0;
  std::vector<HeightTally> heights;
  std::optional<double> wall_ms;
};

inline HeightTally measure_height(const Graph& g, const ClusterSpec& spec, unsigned h,
                                  const Measurements& what, unsigned h_star) {
  const TreeParams& p = g.params();
  HeightTally t;
  t.h = h;
  const std::uint64_t width = p.block_size(h);
  t.sets = p.n() / width;
  const std::uint64_t full = g.directed() ? width * (width - 1) : width * (width - 1) / 2;
  std::uint64_t cliques = 0, dense = 0, clusters = 0;
  EventTally ev;
  ev.h_star_used = h_star;
  CompensatedSum xs_sum, xs_sq;
  for (LeafId root = 0; root < p.n(); root += width) {
    const VertexSet m = VertexSet::complete(root, h, p);
    if (what.cliques || what.xs) {
      const std::uint64_t x = internal_edge_count(m, g);
      if (x == full) ++cliques;
      xs_sum.add(static_cast<double>(x));
      xs_sq.add(static_cast<double>(x) * static_cast<double>(x));
    }
    if (what.events) {
      const EventReport r = event_report(m, g, spec, h_star);
      ev.d += r.dense;
      ev.e1 += r.e1;
      ev.e2 += r.e2;
      ev.e3 += r.e3;
      ev.all += r.cluster();
      dense += r.dense;
      clusters += r.cluster();
    } else if (what.dense || what.clusters) {
      const bool is_dense = is_internally_dense(m, g, spec);
      dense += is_dense;
      if (what.clusters && is_dense && is_externally_sparse(m, g, spec)) ++clusters;
    }
  }
  if (what.cliques) t.cliques = cliques;
  if (what.dense) t.dense_complete = dense;
  if (what.clusters) t.complete_clusters = clusters;
  if (what.events) t.events = ev;
  if (what.xs) {
    const double count = static_cast<double>(t.sets);
    const double mean = xs_sum.value() / count;
    t.xs_mean = mean;
    t.xs_variance = t.sets > 1 ? (xs_sq.value() - count * mean * mean) / (count - 1) : 0.0;
  }
  return t;
}

/// For every H in [H_from, H_to] and every trial: samples a graph and
/// measures each requested height. Reports are ordered by (H, trial).
inline std::vector<TrialReport> run_threshold_sweep(const ExperimentConfig& cfg,
                                                    unsigned threads = 1) {
  cfg.validate();
  for (unsigned H = cfg.H_from; H <= cfg.H_to; ++H) {
    const TreeParams p = cfg.params(H);
    for (unsigned h : cfg.heights) {
      if (h > H) {
        throw std::domain_error("cga: height " + std::to_string(h) + " exceeds H=" + std::to_string(H));
      }
    }
    const double per_trial = static_cast<double>(p.n()) + 4 * expected_edge_count(p, cfg.directed());
    const double cost = per_trial * static_cast<double>(cfg.trials) * static_cast<double>(cfg.heights.size() + 1);
    if (cost > static_cast<double>(cfg.work_budget)) {
      throw BudgetExceeded(static_cast<std::uint64_t>(std::min(cost, 1.8e19)), cfg.work_budget,
                           "sweep at H=" + std::to_string(H) + " (heights " +
                               std::to_string(cfg.heights.front()) + "..)");
    }
  }
  const unsigned span = cfg.H_to - cfg.H_from + 1;
  std::vector<TrialReport> reports(span * cfg.trials);
  parallel_for(reports.size(), threads, [&](std::uint64_t index) {
    const unsigned H = cfg.H_from + static_cast<unsigned>(index / cfg.trials);
    const std::uint64_t trial = index % cfg.trials;
    const auto start = std::chrono::steady_clock::now();
    TrialReport r;
    r.trial = trial;
    r.seed = trial_seed(cfg.seed, trial);
    r.H = H;
    const Graph g = sample_graph(cfg.params(H), r.seed, cfg.directed());
    r.n = g.vertex_count();
    r.edges = g.edge_count();
    for (unsigned h : cfg.heights) {
      r.heights.push_back(measure_height(g, cfg.spec, h, cfg.measure, cfg.resolved_h_star(h, H)));
    }
    if (cfg.timing) {
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    reports[index] = std::move(r);
  });
  return reports;
}

struct Frequency {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  double value() const noexcept { return total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0; }
  /// Binomial standard error sqrt(f (1 - f) / total).
  double standard_error() const noexcept {
    if (!total) return 0.0;
    const double f = value();
    return std::sqrt(f * (1 - f) / static_cast<double>(total));
  }
};

struct EventEstimate {
  unsigned H = 0;
  std::uint64_t n = 0;
  unsigned h_star_used = 0;
  Frequency d, e1, e2, e3, all;
};

namespace detail {

inline VertexSet place_set(LeafId block_root, unsigned h, std::uint64_t m, Placement rule,
                           const TreeParams& p, Xoshiro256& rng) {
  const std::uint64_t width = p.block_size(h);
  std::vector<LeafId> members;
  switch (rule) {
    case Placement::complete:
      return VertexSet::complete(block_root, h, p);
    case Placement::spread:
      for (std::uint64_t i = 0; i < m; ++i) members.push_back(block_root + i * width / m);
      return VertexSet::from_members(std::move(members), p);
    case Placement::random:
      while (true) {
        members.clear();
        detail::sample_distinct_ranks(width, m, rng, members);
        for (auto& v : members) v += block_root;
        VertexSet s = VertexSet::from_members(members, p);
        if (s.height() == h) return s;
      }
  }
  throw std::logic_error("cga: unknown placement");
}

inline void check_template(unsigned h, std::uint64_t m, Placement rule, const TreeParams& p) {
  if (h > p.H()) throw std::domain_error("cga: set height exceeds H");
  const std::uint64_t width = p.block_size(h);
  if (m < 1 || m > width) throw std::domain_error("cga: set size must lie in [1, b^h]");
  if (m == 1 && h != 0) throw std::domain_error("cga: a singleton has height 0");
  if (m >= 2 && h == 0) throw std::domain_error("cga: height 0 holds a single vertex");
  if (rule == Placement::complete && m != width) {
    throw std::domain_error("cga: complete placement needs m = b^h");
  }
}

}  // namespace detail

/// Places one height-h, size-m set in every complete height-h* block (the
/// first height-h subtree of the block) and records the frequencies of D, E1,
/// E2 and E3 over all placed sets and trials, one result per H.
inline std::vector<EventEstimate> estimate_event_probs(const ExperimentConfig& cfg,
                                                       unsigned threads = 1) {
  cfg.validate();
  const unsigned h = cfg.event_height;
  const std::uint64_t m = cfg.event_size;
  std::vector<EventEstimate> out;
  for (unsigned H = cfg.H_from; H <= cfg.H_to; ++H) {
    const TreeParams p = cfg.params(H);
    detail::check_template(h, m, cfg.placement, p);
    const unsigned h_star = cfg.resolved_h_star(h, H);
    const std::uint64_t block = p.block_size(h_star);
    std::vector<EventTally> per_trial(cfg.trials);
    parallel_for(cfg.trials, threads, [&](std::uint64_t trial) {
      const std::uint64_t seed = trial_seed(cfg.seed, trial);
      const Graph g = sample_graph(p, seed, cfg.directed());
      EventTally& t = per_trial[trial];
      for (LeafId root = 0; root < p.n(); root += block) {
        Xoshiro256 rng(stream_key(seed, 0x9ACEULL, root / block));
        const VertexSet s = detail::place_set(root, h, m, cfg.placement, p, rng);
        const EventReport r = event_report(s, g, cfg.spec, h_star);
        t.d += r.dense;
        t.e1 += r.e1;
        t.e2 += r.e2;
        t.e3 += r.e3;
        t.all += r.cluster();
      }
    });
    EventEstimate est;
    est.H = H;
    est.n = p.n();
    est.h_star_used = h_star;
    const std::uint64_t sets_per_trial = p.n() / block;
    for (const auto& t : per_trial) {
      est.d.hits += t.d;
      est.e1.hits += t.e1;
      est.e2.hits += t.e2;
      est.e3.hits += t.e3;
      est.all.hits += t.all;
    }
    for (Frequency* f : {&est.d, &est.e1, &est.e2, &est.e3, &est.all}) {
      f->total = sets_per_trial * cfg.trials;
    }
    out.push_back(est);
  }
  return out;
}

struct TrendPoint {
  unsigned H = 0;
  std::uint64_t n = 0;
  Frequency any_sparse;        // trials in which some size-m set was externally sparse
  Frequency per_set;           // sparse sets among all sets checked
  bool exhaustive = false;     // every size-m set was checked
  double per_set_bound = 0;    // exp(-(1/2) n^(1 - alpha m log_b c))
  double union_bound = 0;      // C(n, m) * per_set_bound
};

/// For a size m < m*, estimates per H how often the sampled graph contains an
/// externally sparse set of size m. When C(n, m) is within
/// trend_exhaustive_limit every size-m set is checked; otherwise the search
/// covers all size-m subsets of each smallest complete block that can hold m
/// vertices plus trend_random_sets uniform random subsets, and is a sampled,
/// not exhaustive, search.
inline std::vector<TrendPoint> trend_sparse_below_mstar(const ExperimentConfig& cfg,
                                                        unsigned threads = 1) {
  cfg.validate();
  const double alpha = cfg.spec.alpha.to_double();
  const double ms = m_star(alpha, cfg.b, cfg.c);
  const std::uint64_t m = cfg.trend_size;
  if (!(ms > 1)) throw std::domain_error("cga: m* <= 1, so there is no set size below m*");
  if (m < 1 || !(static_cast<double>(m) < ms)) throw std::domain_error("cga: trend size must satisfy 1 <= m < m*");

  std::vector<TrendPoint> out;
  for (unsigned H = cfg.H_from; H <= cfg.H_to; ++H) {
    const TreeParams p = cfg.params(H);
    if (m > p.n()) throw std::domain_error("cga: trend size exceeds n");
    const std::uint64_t subsets = detail::binomial_saturating(p.n(), m);
    const bool exhaustive = subsets <= cfg.trend_exhaustive_limit;
    unsigned local_h = 0;
    while (p.block_size(local_h) < m) ++local_h;

    struct Result {
      bool any = false;
      std::uint64_t sparse = 0;
      std::uint64_t checked = 0;
    };
    std::vector<Result> per_trial(cfg.trials);
    parallel_for(cfg.trials, threads, [&](std::uint64_t trial) {
      const std::uint64_t seed = trial_seed(cfg.seed, trial);
      const Graph g = sample_graph(p, seed, cfg.directed());
      Result& r = per_trial[trial];
      auto check = [&](std::vector<LeafId> members) {
        const VertexSet s = VertexSet::from_members(std::move(members), p);
        ++r.checked;
        if (is_externally_sparse(s, g, cfg.spec)) {
          ++r.sparse;
          r.any = true;
        }
      };
      auto for_each_subset = [&](LeafId first, std::uint64_t count) {
        std::vector<LeafId> combo(m);
        for (std::uint64_t i = 0; i < m; ++i) combo[i] = i;
        while (true) {
          std::vector<LeafId> members(combo);
          for (auto& v : members) v += first;
          check(std::move(members));
          std::uint64_t i = m;
          while (i > 0 && combo[i - 1] == count - m + (i - 1)) --i;
          if (i == 0) break;
          ++combo[i - 1];
          for (std::uint64_t j = i; j < m; ++j) combo[j] = combo[j - 1] + 1;
        }
      };
      if (exhaustive) {
        for_each_subset(0, p.n());
        return;
      }
      const std::uint64_t width = p.block_size(local_h);
      for (LeafId root = 0; root < p.n(); root += width) for_each_subset(root, width);
      Xoshiro256 rng(stream_key(seed, 0x7E2DULL, 0));
      for (std::uint64_t k = 0; k < cfg.trend_random_sets; ++k) {
        std::vector<LeafId> members;
        detail::sample_distinct_ranks(p.n(), m, rng, members);
        check(std::move(members));
      }
    });
    TrendPoint pt;
    pt.H = H;
    pt.n = p.n();
    pt.exhaustive = exhaustive;
    pt.any_sparse.total = cfg.trials;
    for (const auto& r : per_trial) {
      pt.any_sparse.hits += r.any;
      pt.per_set.hits += r.sparse;
      pt.per_set.total += r.checked;
    }
    pt.per_set_bound = sparse_set_upper_bound(p.n(), alpha, static_cast<double>(m), cfg.b, cfg.c);
    pt.union_bound = static_cast<double>(subsets) * pt.per_set_bound;
    out.push_back(pt);
  }
  return out;
}

struct XsSummary {
  unsigned H = 0;
  std::uint64_t n = 0;
  unsigned h = 0;
  std::uint64_t samples = 0;
  double mean = 0;
  double variance = 0;
  double standard_error = 0;
  double expected = 0;
};

/// Internal edge counts of all complete height-h sets, pooled over trials,
/// against expected_internal_edges(h).
inline std::vector<XsSummary> xs_statistics(const ExperimentConfig& cfg, unsigned h,
                                            unsigned threads = 1) {
  cfg.validate();
  std::vector<XsSummary> out;
  for (unsigned H = cfg.H_from; H <= cfg.H_to; ++H) {
    const TreeParams p = cfg.params(H);
    if (h < 1 || h > H) throw std::domain_error("cga: h must lie in [1, H]");
    std::vector<std::vector<std::uint64_t>> per_trial(cfg.trials);
    parallel_for(cfg.trials, threads, [&](std::uint64_t trial) {
      const Graph g = sample_graph(p, trial_seed(cfg.seed, trial), cfg.directed());
      const std::uint64_t width = p.block_size(h);
      for (LeafId root = 0; root < p.n(); root += width) {
        per_trial[trial].push_back(internal_edge_count(VertexSet::complete(root, h, p), g));
      }
    });
    CompensatedSum sum, sq;
    std::uint64_t count = 0;
    for (const auto& xs : per_trial) {
      for (std::uint64_t x : xs) {
        sum.add(static_cast<double>(x));
        sq.add(static_cast<double>(x) * static_cast<double>(x));
        ++count;
      }
    }
    XsSummary s;
    s.H = H;
    s.n = p.n();
    s.h = h;
    s.samples = count;
    s.mean = sum.value() / static_cast<double>(count);
    s.variance = count > 1 ? (sq.value() - static_cast<double>(count) * s.mean * s.mean) /
                                 static_cast<double>(count - 1)
                           : 0.0;
    s.standard_error = std::sqrt(s.variance / static_cast<double>(count));
    s.expected = expected_internal_edges(h, p) * (cfg.directed() ? 2 : 1);
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV output

inline std::string rational_text(const Rational& r) { return format_real(r.to_double()); }

/// `# key=value` lines for every resolved setting that can affect results.
inline void write_config_echo(std::ostream& os, const ExperimentConfig& cfg) {
  auto line = [&](const std::string& k, const std::string& v) { os << "# " << k << '=' << v << '\n'; };
  std::string heights;
  for (std::size_t i = 0; i < cfg.heights.size(); ++i) {
    heights += (i ? "," : "") + std::to_string(cfg.heights[i]);
  }
  std::string measure;
  auto add = [&](bool on, const char* name) {
    if (on) measure += (measure.empty() ? "" : ",") + std::string(name);
  };
  add(cfg.measure.cliques, "cliques");
  add(cfg.measure.dense, "dense");
  add(cfg.measure.clusters, "clusters");
  add(cfg.measure.events, "events");
  add(cfg.measure.xs, "xs");
  line("b", std::to_string(cfg.b));
  line("c", format_real(cfg.c));
  line("H_from", std::to_string(cfg.H_from));
  line("H_to", std::to_string(cfg.H_to));
  line("alpha", cfg.spec.alpha.to_string());
  line("beta", cfg.spec.beta.to_string());
  line("mode", to_string(cfg.spec.mode));
  line("epsilon", format_real(cfg.resolved_epsilon()));
  line("trials", std::to_string(cfg.trials));
  line("seed", std::to_string(cfg.seed));
  line("heights", heights);
  line("measure", measure);
  line("h_star", cfg.h_star ? std::to_string(*cfg.h_star) : "auto");
  line("max_n", std::to_string(cfg.max_n));
  line("work_budget", std::to_string(cfg.work_budget));
  line("timing", cfg.timing ? "1" : "0");
  line("event_height", std::to_string(cfg.event_height));
  line("event_size", std::to_string(cfg.event_size));
  line("placement", to_string(cfg.placement));
  line("trend_size", std::to_string(cfg.trend_size));
  line("trend_random_sets", std::to_string(cfg.trend_random_sets));
  line("trend_exhaustive_limit", std::to_string(cfg.trend_exhaustive_limit));
}

inline constexpr const char* kSweepCsvHeader =
    "trial,seed,b,H,c,alpha,beta,epsilon,h,n,cliques,dense_complete,complete_clusters,"
    "e1_rate,e2_rate,e3_rate,d_rate,edges,xs_mean,wall_ms";

/// Config echo, header, then one row per (trial, height). Missing measurements
/// are empty fields.
inline void write_sweep_csv(std::ostream& os, const ExperimentConfig& cfg,
                            const std::vector<TrialReport>& reports) {
  write_config_echo(os, cfg);
  os << kSweepCsvHeader << '\n';
  auto opt_count = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  auto rate = [](std::uint64_t hits, std::uint64_t total) {
    return format_real(static_cast<double>(hits) / static_cast<double>(total));
  };
  for (const TrialReport& r : reports) {
    for (const HeightTally& t : r.heights) {
      std::string row = std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' +
                        std::to_string(cfg.b) + ',' + std::to_string(r.H) + ',' + format_real(cfg.c) +
                        ',' + rational_text(cfg.spec.alpha) + ',' + rational_text(cfg.spec.beta) + ',' +
                        format_real(cfg.resolved_epsilon()) + ',' + std::to_string(t.h) + ',' +
                        std::to_string(r.n) + ',' + opt_count(t.cliques) + ',' +
                        opt_count(t.dense_complete) + ',' + opt_count(t.complete_clusters) + ',';
      if (t.events) {
        row += rate(t.events->e1, t.sets) + ',' + rate(t.events->e2, t.sets) + ',' +
               rate(t.events->e3, t.sets) + ',' + rate(t.events->d, t.sets) + ',';
      } else {
        row += ",,,,";
      }
      row += std::to_string(r.edges) + ',' + (t.xs_mean ? format_real(*t.xs_mean) : std::string()) + ',' +
             (r.wall_ms ? format_real(*r.wall_ms) : std::string());
      os << row << '\n';
    }
  }
}

inline void write_events_csv(std::ostream& os, const ExperimentConfig& cfg,
                             const std::vector<EventEstimate>& rows) {
  write_config_echo(os, cfg);
  os << "H,n,h,m,h_star,sets,d_rate,d_se,e1_rate,e1_se,e2_rate,e2_se,e3_rate,e3_se,cluster_rate,cluster_se\n";
  for (const auto& r : rows) {
    os << r.H << ',' << r.n << ',' << cfg.event_height << ',' << cfg.event_size << ',' << r.h_star_used
       << ',' << r.d.total;
    for (const Frequency* f : {&r.d, &r.e1, &r.e2, &r.e3, &r.all}) {
      os << ',' << format_real(f->value()) << ',' << format_real(f->standard_error());
    }
    os << '\n';
  }
}

inline void write_trend_csv(std::ostream& os, const ExperimentConfig& cfg,
                            const std::vector<TrendPoint>& rows) {
  write_config_echo(os, cfg);
  os << "H,n,m,trials,any_sparse_rate,any_sparse_se,per_set_rate,sets_checked,exhaustive,"
        "per_set_bound,union_bound\n";
  for (const auto& r : rows) {
    os << r.H << ',' << r.n << ',' << cfg.trend_size << ',' << r.any_sparse.total << ','
       << format_real(r.any_sparse.value()) << ',' << format_real(r.any_sparse.standard_error()) << ','
       << format_real(r.per_set.value()) << ',' << r.per_set.total << ',' << (r.exhaustive ? 1 : 0)
       << ',' << format_real(r.per_set_bound) << ',' << format_real(r.union_bound) << '\n';
  }
}

inline void write_xs_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<XsSummary>& rows) {
  write_config_echo(os, cfg);
  os << "H,n,h,samples,mean,variance,standard_error,expected\n";
  for (const auto& r : rows) {
    os << r.H << ',' << r.n << ',' << r.h << ',' << r.samples << ',' << format_real(r.mean) << ','
       << format_real(r.variance) << ',' << format_real(r.standard_error) << ',' << format_real(r.expected)
       << '\n';
  }
}

}  // namespace cga
