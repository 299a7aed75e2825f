#include "snark/graph6.hpp"

#include <fstream>

namespace snark {

namespace {

void put_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

}  // namespace

std::string to_graph6(const CubicGraph& g) {
  if (!g.is_simple()) throw GraphError("graph6 cannot encode parallel edges");
  const int n = g.order();
  std::string out;
  put_size(out, n);
  // Upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
  std::vector<bool> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  for (size_t k = 0; k < bits.size(); k += 6) {
    int chunk = 0;
    for (size_t b = 0; b < 6; ++b) chunk = (chunk << 1) | (k + b < bits.size() && bits[k + b] ? 1 : 0);
    out.push_back(static_cast<char>(63 + chunk));
  }
  return out;
}

CubicGraph from_graph6(const std::string& raw, long line_number) {
  std::string line = raw;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
  if (line.empty()) throw Graph6Error("empty line", line_number);
  for (char c : line)
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 range", line_number);
  size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw Graph6Error("unsupported size header", line_number);
    n = ((line[1] - 63L) << 12) | ((line[2] - 63L) << 6) | (line[3] - 63L);
    pos = 4;
  }
  if (n > kMaxVertices) throw Graph6Error("graph too large", line_number);
  const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  const size_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos != nbytes) throw Graph6Error("length does not match vertex count", line_number);
  CubicGraph g(static_cast<int>(n));
  size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        try {
          g.add_edge(i, j);
        } catch (const GraphError& e) {
          throw Graph6Error(e.what(), line_number);
        }
      }
    }
  }
  return g;
}

std::vector<CubicGraph> read_graph6(std::istream& in) {
  std::vector<CubicGraph> out;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line, number));
  }
  return out;
}

std::vector<CubicGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6(in);
}

void write_graph6(std::ostream& out, const CubicGraph& g) { out << to_graph6(g) << '\n'; }

}  // namespace snark
