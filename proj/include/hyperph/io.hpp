#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperph/filtration.hpp"
#include "hyperph/morphism.hpp"

namespace hyperph {

// Error in an input file, carrying the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& detail)
      : std::runtime_error("line " + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  ParseError(const std::string& file, int line, const std::string& detail)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

// Weighted hypergraph text format: one hyperedge per line as
//   <weight> : <vertex> <vertex> ...
// The weight part is optional (defaults to 0); '#' starts a comment; blank
// lines are skipped. Vertex labels are arbitrary whitespace-free tokens and
// are indexed in order of first appearance. Repeated vertices within a line
// are collapsed; a hyperedge listed twice is an error.
FilteredHypergraph parse_hypergraph(std::istream& in);
FilteredHypergraph parse_hypergraph_file(const std::string& path);

// Writes the same format back out, one edge per canonical-order line.
// Feeding the output to parse_hypergraph reproduces the filtration, and the
// composition is idempotent at the byte level.
std::string emit_hypergraph(const FilteredHypergraph& f);

// Vertex map format: one pair per line as  <vertex> -> <vertex'>.
// Returns the map as a vector over the domain's vertex indices. Every domain
// vertex must be assigned exactly once and every image must name a codomain
// vertex.
std::vector<int> parse_vertex_map(std::istream& in, const Hypergraph& domain,
                                  const Hypergraph& codomain);
std::vector<int> parse_vertex_map_file(const std::string& path,
                                       const Hypergraph& domain,
                                       const Hypergraph& codomain);

// A directory of <timestamp>.hg files, ordered by numeric timestamp.
struct Snapshot {
  double time = 0;
  std::string label;
  FilteredHypergraph filtration;
};
std::vector<Snapshot> load_evolution_log(const std::string& dir);

// Shortest round-trip decimal form; infinities render as "inf"/"-inf".
std::string format_real(double v);

}  // namespace hyperph
