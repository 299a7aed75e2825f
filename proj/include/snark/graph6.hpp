#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, long line)
      : std::runtime_error("graph6 line " + std::to_string(line) + ": " + what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Encodes a simple graph (no header, no newline).
std::string to_graph6(const CubicGraph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" header is accepted.
CubicGraph from_graph6(const std::string& line, long line_number = 1);

/// Reads every non-empty line of a graph6 stream.
std::vector<CubicGraph> read_graph6(std::istream& in);
std::vector<CubicGraph> read_graph6_file(const std::string& path);

void write_graph6(std::ostream& out, const CubicGraph& g);

}  // namespace snark
