#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snark {

using Vertex = int;
using EdgeId = int;

// Generators and bitset-based routines address vertices with 64-bit masks.
inline constexpr int kMaxVertices = 64;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u = -1;
  Vertex v = -1;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return u == w || v == w; }
  Vertex low() const { return u < v ? u : v; }
  Vertex high() const { return u < v ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Lexicographic order on edges: {v,w} < {v',w'} iff min{v,w} < min{v',w'},
// ties broken by the larger endpoint.
inline bool edge_less(const Edge& a, const Edge& b) {
  if (a.low() != b.low()) return a.low() < b.low();
  return a.high() < b.high();
}

// Two edges lying opposite on a 4-cycle. The reduction removes `first`;
// removing `second` instead gives an isomorphic graph.
struct EdgePair {
  EdgeId first = -1;
  EdgeId second = -1;
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

struct FourCycle {
  std::array<Vertex, 4> vertices{};  // cyclic order
};

struct Incidence {
  Vertex to = -1;
  EdgeId edge = -1;
};

/// Labelled graph of maximum degree 3 with stable edge identifiers.
///
/// Edge ids are indices into the edge list and stay valid until an edge is
/// removed; `remove_last_edge` is O(1) and is what the generators use for
/// undo. Parallel edges are rejected unless the graph is in multigraph mode.
class CubicGraph {
 public:
  CubicGraph() = default;
  explicit CubicGraph(int n, bool multigraph = false);

  static CubicGraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                               bool multigraph = false);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  bool multigraph() const { return multigraph_; }
  void set_multigraph(bool on);

  int degree(Vertex v) const { return deg_[v]; }
  const std::array<Incidence, 3>& incidences(Vertex v) const { return adj_[v]; }
  Vertex neighbour(Vertex v, int slot) const { return adj_[v][slot].to; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex v, Vertex w) const;
  std::optional<EdgeId> find_edge(Vertex v, Vertex w) const;
  int multiplicity(Vertex v, Vertex w) const;

  EdgeId add_edge(Vertex v, Vertex w);
  void remove_last_edge();
  // Removes edge `e`; the last edge takes over id `e`.
  void remove_edge(EdgeId e);

  bool is_complete() const;  // every vertex has degree 3
  bool is_simple() const;

  // Edge set as sorted (low, high) pairs; equality ignores edge ids.
  std::vector<std::pair<Vertex, Vertex>> sorted_edge_list() const;
  bool same_edges(const CubicGraph& other) const;

  // Applies `perm` (old label -> new label) to all vertices.
  CubicGraph relabelled(const std::vector<Vertex>& perm) const;

 private:
  void attach(Vertex v, Vertex w, EdgeId e);
  void detach(Vertex v, EdgeId e);

  std::vector<std::array<Incidence, 3>> adj_;
  std::vector<uint8_t> deg_;
  std::vector<Edge> edges_;
  bool multigraph_ = false;
};

// Text form of the internal sparse format used for multigraphs:
// "n; 0:a,b,c; 1:...".
std::string to_sparse(const CubicGraph& g);
CubicGraph from_sparse(const std::string& line);

}  // namespace snark
