#pragma once

// Plain-text experiment configuration: one `key=value` per line, `#` starts
// a comment, blank lines are ignored. Unknown keys are errors.
//
//   b=2
//   c=2
//   H=12            # or H_from=8 / H_to=12
//   alpha=0.5
//   beta=0.5
//   trials=200
//   seed=7
//   heights=1,2
//   measure=cliques,xs

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "experiments.hpp"

namespace cga {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T config_integer(const std::string& key, const std::string& text) {
  T out{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("cga: config key '" + key + "': bad integer '" + text + "'");
  }
  return out;
}

inline double config_real(const std::string& key, const std::string& text) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError("cga: config key '" + key + "': bad number '" + text + "'");
  }
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace detail

/// Applies one setting to `cfg`.
inline void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  using detail::config_integer;
  using detail::config_real;
  Rational alpha = cfg.spec.alpha, beta = cfg.spec.beta;
  EdgeMode mode = cfg.spec.mode;
  if (key == "b") {
    cfg.b = config_integer<std::uint64_t>(key, value);
  } else if (key == "c") {
    cfg.c = config_real(key, value);
  } else if (key == "H") {
    cfg.H_from = cfg.H_to = config_integer<unsigned>(key, value);
  } else if (key == "H_from") {
    cfg.H_from = config_integer<unsigned>(key, value);
  } else if (key == "H_to") {
    cfg.H_to = config_integer<unsigned>(key, value);
  } else if (key == "alpha" || key == "beta") {
    try {
      (key == "alpha" ? alpha : beta) = Rational::parse(value);
    } catch (const std::invalid_argument&) {
      throw ConfigError("cga: config key '" + key + "': bad value '" + value + "'");
    }
  } else if (key == "mode") {
    if (value == "undirected") {
      mode = EdgeMode::undirected;
    } else if (value == "directed-out" || value == "directed") {
      mode = EdgeMode::directed_out;
    } else {
      throw ConfigError("cga: config key 'mode': expected undirected or directed-out");
    }
  } else if (key == "epsilon") {
    if (value == "auto") {
      cfg.epsilon.reset();
    } else {
      cfg.epsilon = config_real(key, value);
    }
  } else if (key == "trials") {
    cfg.trials = config_integer<std::uint64_t>(key, value);
  } else if (key == "seed") {
    cfg.seed = config_integer<std::uint64_t>(key, value);
  } else if (key == "heights") {
    cfg.heights.clear();
    for (const auto& item : detail::split_list(value)) cfg.heights.push_back(config_integer<unsigned>(key, item));
    if (cfg.heights.empty()) throw ConfigError("cga: config key 'heights' is empty");
  } else if (key == "measure") {
    cfg.measure = Measurements{false, false, false, false, false};
    for (const auto& item : detail::split_list(value)) {
      if (item == "cliques") cfg.measure.cliques = true;
      else if (item == "dense") cfg.measure.dense = true;
      else if (item == "clusters") cfg.measure.clusters = true;
      else if (item == "events") cfg.measure.events = true;
      else if (item == "xs") cfg.measure.xs = true;
      else if (item == "all") cfg.measure = Measurements{};
      else throw ConfigError("cga: config key 'measure': unknown measurement '" + item + "'");
    }
  } else if (key == "h_star") {
    if (value == "auto") {
      cfg.h_star.reset();
    } else {
      cfg.h_star = config_integer<unsigned>(key, value);
    }
  } else if (key == "max_n") {
    cfg.max_n = config_integer<std::uint64_t>(key, value);
  } else if (key == "work_budget") {
    cfg.work_budget = config_integer<std::uint64_t>(key, value);
  } else if (key == "timing") {
    cfg.timing = config_integer<unsigned>(key, value) != 0;
  } else if (key == "event_height") {
    cfg.event_height = config_integer<unsigned>(key, value);
  } else if (key == "event_size") {
    cfg.event_size = config_integer<std::uint64_t>(key, value);
  } else if (key == "placement") {
    if (value == "complete") cfg.placement = Placement::complete;
    else if (value == "spread") cfg.placement = Placement::spread;
    else if (value == "random") cfg.placement = Placement::random;
    else throw ConfigError("cga: config key 'placement': expected complete, spread or random");
  } else if (key == "trend_size") {
    cfg.trend_size = config_integer<std::uint64_t>(key, value);
  } else if (key == "trend_random_sets") {
    cfg.trend_random_sets = config_integer<std::uint64_t>(key, value);
  } else if (key == "trend_exhaustive_limit") {
    cfg.trend_exhaustive_limit = config_integer<std::uint64_t>(key, value);
  } else {
    throw ConfigError("cga: unknown config key '" + key + "'");
  }
  try {
    cfg.spec = ClusterSpec::make(alpha, beta, mode);
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
}

inline ExperimentConfig parse_config(std::istream& in, ExperimentConfig cfg = {}) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("cga: config line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(cfg, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cga: cannot open config " + path);
  return parse_config(in);
}

}  // namespace cga
