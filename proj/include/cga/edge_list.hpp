#pragma once

// Edge-list text format:
//
//   # cga b=<b> H=<H> c=<c> seed=<seed> directed=<0|1>
//   <u> <v>
//   ...
//
// One edge (or arc) per line, decimal, sorted by (u, v); undirected edges are
// written with u < v. c is written as the shortest decimal that round-trips.

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "graph.hpp"
#include "numeric.hpp"

namespace cga {

/// Raised when an edge-list file cannot be parsed.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string edge_list_header(const Graph& g) {
  const auto& p = g.params();
  return "# cga b=" + std::to_string(p.b()) + " H=" + std::to_string(p.H()) +
         " c=" + format_real(p.c()) + " seed=" + std::to_string(g.seed()) +
         " directed=" + (g.directed() ? "1" : "0");
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  std::string buffer = edge_list_header(g);
  buffer += '\n';
  for (const Edge& e : g.edges()) {
    buffer += std::to_string(e.u);
    buffer += ' ';
    buffer += std::to_string(e.v);
    buffer += '\n';
  }
  out << buffer;
}

inline std::string edge_list_string(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

namespace detail {

template <class T>
T parse_integer(const std::string& text, const char* what) {
  T out{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw FormatError(std::string("cga: bad ") + what + ": '" + text + "'");
  }
  return out;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("cga: empty edge-list file");
  std::istringstream header(line);
  std::string hash, tag;
  header >> hash >> tag;
  if (hash != "#" || tag != "cga") throw FormatError("cga: missing '# cga' header");
  std::map<std::string, std::string> fields;
  for (std::string kv; header >> kv;) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw FormatError("cga: bad header field '" + kv + "'");
    fields[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  for (const char* key : {"b", "H", "c", "seed", "directed"}) {
    if (!fields.count(key)) throw FormatError(std::string("cga: header lacks '") + key + "'");
  }
  const auto directed_text = fields["directed"];
  if (directed_text != "0" && directed_text != "1") throw FormatError("cga: directed must be 0 or 1");
  double c = 0;
  try {
    c = parse_real(fields["c"]);
  } catch (const std::invalid_argument&) {
    throw FormatError("cga: bad c in header");
  }
  auto params = [&] {
    try {
      return TreeParams(detail::parse_integer<std::uint64_t>(fields["b"], "b"),
                        detail::parse_integer<unsigned>(fields["H"], "H"), c);
    } catch (const std::domain_error& e) {
      throw FormatError(e.what());
    }
  }();
  const auto seed = detail::parse_integer<std::uint64_t>(fields["seed"], "seed");

  std::vector<Edge> edges;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos) {
      throw FormatError("cga: line " + std::to_string(line_no) + ": expected '<u> <v>'");
    }
    edges.push_back({detail::parse_integer<LeafId>(line.substr(0, space), "vertex"),
                     detail::parse_integer<LeafId>(line.substr(space + 1), "vertex")});
  }
  try {
    return Graph(params, directed_text == "1", seed, std::move(edges));
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cga: cannot open " + path);
  return read_edge_list(in);
}

inline void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cga: cannot open " + path + " for writing");
  write_edge_list(out, g);
  out.flush();
  if (!out) throw std::ios_base::failure("cga: write failed for " + path);
}

}  // namespace cga
