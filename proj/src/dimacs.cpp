#include "rwstab/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace rwstab {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw DimacsError(line, std::string("malformed ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_problem = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::set<Edge> seen;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    auto fields = split_fields(raw);
    if (fields.empty() || fields[0] == "c") continue;
    if (fields[0] == "p") {
      if (have_problem) throw DimacsError(line_no, "second problem line");
      if (fields.size() != 4 || fields[1] != "edge") {
        throw DimacsError(line_no, "expected 'p edge <n> <m>'");
      }
      n = parse_count(fields[2], line_no, "vertex count");
      m = parse_count(fields[3], line_no, "edge count");
      have_problem = true;
      continue;
    }
    if (fields[0] == "e") {
      if (!have_problem) throw DimacsError(line_no, "edge line before problem line");
      if (fields.size() != 3) throw DimacsError(line_no, "expected 'e <u> <v>'");
      std::size_t u = parse_count(fields[1], line_no, "vertex id");
      std::size_t v = parse_count(fields[2], line_no, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw DimacsError(line_no, "vertex id out of range 1.." + std::to_string(n));
      }
      if (u == v) throw DimacsError(line_no, "self-loop at vertex " + std::to_string(u));
      Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
      if (!seen.insert(e).second) {
        throw DimacsError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      edges.push_back(e);
      continue;
    }
    throw DimacsError(line_no, "unrecognised line type '" + std::string(fields[0]) + "'");
  }
  if (!have_problem) throw DimacsError(0, "missing problem line");
  if (edges.size() != m) {
    throw DimacsError(line_no, "problem line announces " + std::to_string(m) + " edges, found " +
                                   std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DimacsError(0, "cannot open " + path);
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace rwstab
