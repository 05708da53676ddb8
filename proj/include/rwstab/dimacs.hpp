#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rwstab/graph.hpp"

namespace rwstab {

/// Raised by read_dimacs; line() is 1-based (0 when the error is global,
/// e.g. a missing problem line).
class DimacsError : public std::runtime_error {
 public:
  DimacsError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses `p edge <n> <m>` followed by m `e <u> <v>` lines (1-based ids).
/// Lines starting with `c` and blank lines are ignored. Duplicate edges,
/// self-loops, out-of-range ids and an edge count differing from m are errors.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

/// Writes the problem line and edges in ascending order. Each entry of
/// `comments` becomes one `c ` line ahead of the problem line.
void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments = {});

}  // namespace rwstab
