// cga: command-line front end for CGA graph sampling, cluster verification,
// exhaustive search, bound evaluation and Monte Carlo experiments.
//
// Exit codes: 0 success (verify: the set is a cluster), 1 verify: not a
// cluster, 2 usage or parameter error, 3 I/O failure, 4 work budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cga/cga.hpp"

namespace {

constexpr int kExitNotCluster = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void echo(std::ostream& os, const std::string& key, const std::string& value) {
  os << "# " << key << '=' << value << '\n';
}

std::uint64_t work_budget_from_env() {
  const char* text = std::getenv("CGA_WORK_BUDGET");
  if (!text || !*text) return cga::kDefaultWorkBudget;
  std::uint64_t out = 0;
  const std::string s(text);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("CGA_WORK_BUDGET must be a non-negative integer");
  }
  return out;
}

cga::Rational parse_threshold(const std::string& name, const std::string& text) {
  try {
    return cga::Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + " must be a number in (0, 1]");
  }
}

cga::ClusterSpec make_spec(const std::string& alpha, const std::string& beta, const cga::Graph* g) {
  const auto mode = g && g->directed() ? cga::EdgeMode::directed_out : cga::EdgeMode::undirected;
  try {
    return cga::ClusterSpec::make(parse_threshold("alpha", alpha), parse_threshold("beta", beta), mode);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

cga::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open graph file " + path);
  try {
    return cga::read_edge_list(in);
  } catch (const cga::FormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

cga::VertexSet parse_set(const std::string& text, const cga::TreeParams& p) {
  std::vector<cga::LeafId> members;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    cga::LeafId v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw UsageError("--set: bad vertex '" + item + "'");
    }
    if (v >= p.n()) throw UsageError("--set: vertex " + item + " is out of range [0, " + std::to_string(p.n()) + ")");
    members.push_back(v);
  }
  if (members.empty()) throw UsageError("--set must list at least one vertex");
  try {
    return cga::VertexSet::from_members(std::move(members), p);
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
}

std::string set_text(const cga::VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s.members()) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string witness_text(const std::optional<cga::Witness>& w) {
  return w ? std::to_string(w->vertex) + ":" + std::to_string(w->edges) : std::string("none");
}

void print_list(std::ostream& os, const cga::ClusterList& list) {
  os << "# search=" << list.search_space << '\n';
  os << "count=" << list.clusters.size() << '\n';
  for (const auto& entry : list.clusters) {
    os << "cluster size=" << entry.set.size() << " height=" << entry.set.height()
       << " complete=" << (entry.complete ? 1 : 0) << ' ' << set_text(entry.set) << '\n';
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open " + path + " for writing");
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community Guided Attachment graphs and (alpha,beta)-clusters"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Sample a CGA graph and write its edge list");
  std::uint64_t gen_b = 2;
  unsigned gen_H = 1;
  double gen_c = 2;
  std::uint64_t gen_seed = 0;
  bool gen_directed = false;
  std::string gen_out;
  unsigned gen_threads = 1;
  gen->add_option("--b", gen_b, "Fan-out b (>= 2)")->required();
  gen->add_option("--height", gen_H, "Tree height H (>= 1)")->required();
  gen->add_option("--c", gen_c, "Shrinking parameter c (> 1)")->required();
  gen->add_option("--seed", gen_seed, "Seed")->required();
  gen->add_flag("--directed", gen_directed, "Sample the directed model");
  gen->add_option("--out", gen_out, "Output path (default: standard output)");
  gen->add_option("--threads", gen_threads, "Worker threads (output does not depend on it)");

  // verify
  auto* ver = app.add_subcommand("verify", "Check whether a vertex set is an (alpha,beta)-cluster");
  std::string ver_graph, ver_set, ver_alpha, ver_beta;
  std::optional<unsigned> ver_hstar;
  ver->add_option("--graph", ver_graph, "Edge-list file")->required();
  ver->add_option("--set", ver_set, "Comma-separated vertex list")->required();
  ver->add_option("--alpha", ver_alpha, "Sparseness threshold in (0,1]")->required();
  ver->add_option("--beta", ver_beta, "Density threshold in (0,1]")->required();
  ver->add_option("--hstar", ver_hstar, "Height splitting E2 from E3");

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "List complete clusters of one height");
  std::string enu_graph, enu_alpha, enu_beta;
  unsigned enu_height = 0;
  enu->add_option("--graph", enu_graph, "Edge-list file")->required();
  enu->add_option("--alpha", enu_alpha)->required();
  enu->add_option("--beta", enu_beta)->required();
  enu->add_option("--height", enu_height, "Height of the complete sets")->required();

  // oracle
  auto* ora = app.add_subcommand("oracle", "Exhaustively list all clusters up to a size");
  std::string ora_graph, ora_alpha, ora_beta;
  std::uint64_t ora_max = 1;
  ora->add_option("--graph", ora_graph, "Edge-list file")->required();
  ora->add_option("--alpha", ora_alpha)->required();
  ora->add_option("--beta", ora_beta)->required();
  ora->add_option("--max-size", ora_max, "Largest set size searched")->required();

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Evaluate threshold constants and bounds");
  std::uint64_t bnd_b = 2;
  double bnd_c = 2, bnd_alpha = 0.5;
  std::optional<unsigned> bnd_H, bnd_h;
  std::optional<double> bnd_eps, bnd_m, bnd_family;
  std::optional<std::uint64_t> tail_n;
  std::optional<double> tail_p, tail_t, tail_s, j_mu, j_t;
  bnd->add_option("--b", bnd_b)->required();
  bnd->add_option("--c", bnd_c)->required();
  bnd->add_option("--alpha", bnd_alpha)->required();
  bnd->add_option("--height", bnd_H, "Tree height H for n-dependent quantities");
  bnd->add_option("--epsilon", bnd_eps, "epsilon (default min(0.1, ln c/(8 ln b)))");
  bnd->add_option("--set-height", bnd_h, "Set height for clique and X_S quantities");
  bnd->add_option("--m", bnd_m, "Set size for the cluster-count guarantee");
  bnd->add_option("--family-size", bnd_family, "Family size for the cluster-count guarantee");
  bnd->add_option("--tail-n", tail_n, "Binomial trials for tail bounds");
  bnd->add_option("--tail-p", tail_p, "Binomial success probability");
  bnd->add_option("--tail-t", tail_t, "Multiplier t > 1 for the tail bound");
  bnd->add_option("--tail-s", tail_s, "Threshold s >= 2pn for the simplified tail bound");
  bnd->add_option("--mu", j_mu, "Mean for the Janson bounds");
  bnd->add_option("--t", j_t, "Deviation for the Janson bounds");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a Monte Carlo experiment and write CSV");
  std::string exp_kind, exp_config, exp_out;
  std::vector<std::string> exp_overrides;
  unsigned exp_threads = 1;
  std::optional<unsigned> exp_xs_height;
  exp->add_option("kind", exp_kind, "sweep | events | trend | xs")
      ->required()
      ->check(CLI::IsMember({"sweep", "events", "trend", "xs"}));
  exp->add_option("--config", exp_config, "key=value configuration file");
  exp->add_option("--set", exp_overrides, "Override one setting (key=value), repeatable");
  exp->add_option("--out", exp_out, "CSV output path (default: standard output)");
  exp->add_option("--threads", exp_threads, "Worker threads (output does not depend on it)");
  exp->add_option("--xs-height", exp_xs_height, "Height for the xs experiment (default: first of heights)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      cga::TreeParams params = [&] {
        try {
          return cga::TreeParams(gen_b, gen_H, gen_c);
        } catch (const std::domain_error& e) {
          throw UsageError(e.what());
        }
      }();
      echo(std::cerr, "command", "generate");
      echo(std::cerr, "b", std::to_string(gen_b));
      echo(std::cerr, "H", std::to_string(gen_H));
      echo(std::cerr, "c", cga::format_real(gen_c));
      echo(std::cerr, "seed", std::to_string(gen_seed));
      echo(std::cerr, "directed", gen_directed ? "1" : "0");
      echo(std::cerr, "out", gen_out.empty() ? "-" : gen_out);
      const cga::Graph g = cga::sample_graph(params, gen_seed, gen_directed, gen_threads);
      std::ofstream file;
      std::ostream& os = open_output(gen_out, file);
      cga::write_edge_list(os, g);
      os.flush();
      if (!os) throw std::ios_base::failure("write failed");
      return 0;
    }

    if (*ver) {
      const cga::Graph g = load_graph(ver_graph);
      const cga::ClusterSpec spec = make_spec(ver_alpha, ver_beta, &g);
      const cga::VertexSet m = parse_set(ver_set, g.params());
      echo(std::cout, "command", "verify");
      echo(std::cout, "graph", ver_graph);
      echo(std::cout, "set", set_text(m));
      echo(std::cout, "alpha", spec.alpha.to_string());
      echo(std::cout, "beta", spec.beta.to_string());
      echo(std::cout, "mode", cga::to_string(spec.mode));
      echo(std::cout, "hstar", ver_hstar ? std::to_string(*ver_hstar) : "none");
      std::cout << "size=" << m.size() << " height=" << m.height() << '\n';
      const auto dense_witness = cga::density_violation(m, g, spec);
      const bool sparse = cga::is_externally_sparse(m, g, spec);
      std::cout << "dense=" << (dense_witness ? 0 : 1) << " witness=" << witness_text(dense_witness) << '\n';
      std::optional<cga::Witness> sparse_witness;
      for (const auto& w : cga::external_counts(m, g, spec.mode)) {
        if (spec.alpha.compare_count(w.edges, m.size()) > 0) {
          sparse_witness = w;
          break;
        }
      }
      std::cout << "sparse=" << (sparse ? 1 : 0) << " witness=" << witness_text(sparse_witness) << '\n';
      if (ver_hstar) {
        if (*ver_hstar < m.height() || *ver_hstar > g.params().H()) {
          throw UsageError("--hstar must lie in [set height, H]");
        }
        const cga::EventReport r = cga::event_report(m, g, spec, *ver_hstar);
        std::cout << "e1=" << r.e1 << " witness=" << witness_text(r.e1_witness) << '\n';
        std::cout << "e2=" << r.e2 << " witness=" << witness_text(r.e2_witness) << '\n';
        std::cout << "e3=" << r.e3 << " witness=" << witness_text(r.e3_witness) << '\n';
      }
      const bool cluster = !dense_witness && sparse;
      std::cout << "cluster=" << (cluster ? 1 : 0) << '\n';
      return cluster ? 0 : kExitNotCluster;
    }

    if (*enu) {
      const cga::Graph g = load_graph(enu_graph);
      const cga::ClusterSpec spec = make_spec(enu_alpha, enu_beta, &g);
      if (enu_height > g.params().H()) throw UsageError("--height must lie in [0, H]");
      echo(std::cout, "command", "enumerate");
      echo(std::cout, "graph", enu_graph);
      echo(std::cout, "alpha", spec.alpha.to_string());
      echo(std::cout, "beta", spec.beta.to_string());
      echo(std::cout, "mode", cga::to_string(spec.mode));
      echo(std::cout, "height", std::to_string(enu_height));
      print_list(std::cout, cga::enumerate_complete_clusters(g, spec, enu_height));
      return 0;
    }

    if (*ora) {
      const cga::Graph g = load_graph(ora_graph);
      const cga::ClusterSpec spec = make_spec(ora_alpha, ora_beta, &g);
      const std::uint64_t budget = work_budget_from_env();
      echo(std::cout, "command", "oracle");
      echo(std::cout, "graph", ora_graph);
      echo(std::cout, "alpha", spec.alpha.to_string());
      echo(std::cout, "beta", spec.beta.to_string());
      echo(std::cout, "mode", cga::to_string(spec.mode));
      echo(std::cout, "max_size", std::to_string(ora_max));
      echo(std::cout, "work_budget", std::to_string(budget));
      print_list(std::cout, cga::enumerate_clusters(g, spec, ora_max, budget));
      return 0;
    }

    if (*bnd) {
      using cga::format_real_point;
      auto out = [](const std::string& k, double v) { std::cout << k << '=' << format_real_point(v) << '\n'; };
      try {
        echo(std::cout, "command", "bounds");
        echo(std::cout, "b", std::to_string(bnd_b));
        echo(std::cout, "c", cga::format_real(bnd_c));
        echo(std::cout, "alpha", cga::format_real(bnd_alpha));
        out("m_star", cga::m_star(bnd_alpha, bnd_b, bnd_c));
        out("gamma", cga::gamma_constant(bnd_alpha, bnd_b, bnd_c));
        if (bnd_H) {
          const cga::TreeParams p(bnd_b, *bnd_H, bnd_c);
          const double eps = bnd_eps.value_or(std::min(0.1, std::log(bnd_c) / (8 * std::log(static_cast<double>(bnd_b)))));
          echo(std::cout, "H", std::to_string(*bnd_H));
          echo(std::cout, "epsilon", cga::format_real(eps));
          const auto th = cga::threshold_heights(p, eps);
          std::cout << "n=" << p.n() << '\n';
          out("h_star", th.h_star);
          out("h_epsilon", th.h_epsilon);
          out("tall_height", th.tall_height);
          out("expected_edges", cga::expected_edge_count(p));
          if (bnd_h) {
            const auto lb = cga::clique_count_lower_bound(*bnd_h, p);
            const auto exact = cga::exact_clique_probability(*bnd_h, p);
            echo(std::cout, "h", std::to_string(*bnd_h));
            out("clique_count_lower_bound", lb.value);
            out("log_clique_count_lower_bound", lb.log);
            out("exact_clique_probability", exact.value);
            out("log_exact_clique_probability", exact.log);
            if (*bnd_h >= 1) out("expected_internal_edges", cga::expected_internal_edges(*bnd_h, p));
          }
          if (bnd_m) {
            const double family = bnd_family.value_or(static_cast<double>(p.n()));
            echo(std::cout, "m", cga::format_real(*bnd_m));
            echo(std::cout, "family_size", cga::format_real(family));
            out("cluster_count_guarantee", cga::cluster_count_guarantee(*bnd_m, p, bnd_alpha, family));
            out("sparse_set_upper_bound", cga::sparse_set_upper_bound(p.n(), bnd_alpha, *bnd_m, bnd_b, bnd_c));
          }
        }
        if (tail_n && tail_p) {
          echo(std::cout, "tail_n", std::to_string(*tail_n));
          echo(std::cout, "tail_p", cga::format_real(*tail_p));
          if (tail_t) out("binom_tail_bound", cga::binom_tail_bound(*tail_n, *tail_p, *tail_t));
          if (tail_s) {
            out("binom_tail_simple", cga::binom_tail_simple(*tail_n, *tail_p, *tail_s));
            out("binom_tail_simple_intermediate", cga::binom_tail_simple_intermediate(*tail_n, *tail_p, *tail_s));
          }
        }
        if (j_mu && j_t) {
          const auto jb = cga::janson_bounds(*j_mu, *j_t);
          out("janson_upper", jb.upper);
          out("janson_lower", jb.lower);
        }
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      }
      return 0;
    }

    if (*exp) {
      cga::ExperimentConfig cfg;
      try {
        if (!exp_config.empty()) cfg = cga::load_config(exp_config);
        for (const auto& kv : exp_overrides) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos) throw UsageError("--set expects key=value");
          cga::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
        }
      } catch (const cga::ConfigError& e) {
        throw UsageError(e.what());
      }
      std::ostringstream csv;
      try {
        if (exp_kind == "sweep") {
          cga::write_sweep_csv(csv, cfg, cga::run_threshold_sweep(cfg, exp_threads));
        } else if (exp_kind == "events") {
          cga::write_events_csv(csv, cfg, cga::estimate_event_probs(cfg, exp_threads));
        } else if (exp_kind == "trend") {
          cga::write_trend_csv(csv, cfg, cga::trend_sparse_below_mstar(cfg, exp_threads));
        } else {
          const unsigned h = exp_xs_height.value_or(cfg.heights.front());
          cga::write_xs_csv(csv, cfg, cga::xs_statistics(cfg, h, exp_threads));
        }
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      }
      std::ofstream file;
      std::ostream& os = open_output(exp_out, file);
      os << csv.str();
      os.flush();
      if (!os) throw std::ios_base::failure("write failed");
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cga::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
