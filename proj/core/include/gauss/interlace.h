#pragma once

#include <vector>

#include "gauss/code.h"
#include "gauss/gf2.h"

namespace gauss {

/// Undirected edge, u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Circle graph of a chord diagram: vertex c is chord c, and two vertices are
/// adjacent iff their chords interleave. The adjacency matrix is the primary
/// representation; the edge list is derived from it.
class InterlacementGraph {
 public:
  InterlacementGraph() = default;
  /// Throws std::invalid_argument unless the matrix is symmetric with zero diagonal.
  explicit InterlacementGraph(Gf2Matrix adjacency);

  static InterlacementGraph from_diagram(const ChordDiagram& d);
  static InterlacementGraph from_code(const GaussCode& code) { return from_diagram(ChordDiagram::from_code(code)); }

  int vertex_count() const { return adjacency_.size(); }
  bool adjacent(int i, int j) const { return adjacency_.get(i, j); }
  int degree(int i) const;
  std::vector<int> neighbors(int i) const;
  std::vector<std::vector<int>> adjacency_lists() const;

  const Gf2Matrix& adjacency() const { return adjacency_; }
  /// Lexicographic (u, v) order.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Graphs with at most one vertex count as connected.
  bool is_connected() const;

  friend bool operator==(const InterlacementGraph& a, const InterlacementGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  Gf2Matrix adjacency_;
  std::vector<Edge> edges_;
};

inline InterlacementGraph interlacement_graph(const ChordDiagram& d) { return InterlacementGraph::from_diagram(d); }
inline const Gf2Matrix& adjacency_matrix(const InterlacementGraph& g) { return g.adjacency(); }

int common_neighbor_count(const InterlacementGraph& g, int i, int j);
/// <m_i, m_j> over GF(2); equals square(M)[i][j]. For i == j this is deg(i) mod 2.
bool common_neighbor_parity(const InterlacementGraph& g, int i, int j);

/// Interlacement graph with w(i, j) = <m_i, m_j> on every edge.
class WeightedInterlacementGraph {
 public:
  WeightedInterlacementGraph() = default;
  explicit WeightedInterlacementGraph(InterlacementGraph base);

  const InterlacementGraph& base() const { return base_; }
  const Gf2Matrix& squared() const { return squared_; }
  /// Parallel to base().edges().
  const std::vector<bool>& weights() const { return weights_; }
  bool weight(int i, int j) const { return squared_.get(i, j); }
  std::vector<Edge> odd_edges() const;

 private:
  InterlacementGraph base_;
  Gf2Matrix squared_;
  std::vector<bool> weights_;
};

inline WeightedInterlacementGraph weighted_graph(const InterlacementGraph& g) { return WeightedInterlacementGraph(g); }

}  // namespace gauss
