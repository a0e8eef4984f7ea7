#include "gauss/interlace.h"

#include <bit>
#include <stdexcept>

namespace gauss {

InterlacementGraph::InterlacementGraph(Gf2Matrix adjacency) : adjacency_(std::move(adjacency)) {
  const int n = adjacency_.size();
  if (!adjacency_.is_symmetric()) throw std::invalid_argument("interlacement matrix must be symmetric");
  for (int i = 0; i < n; ++i) {
    if (adjacency_.get(i, i)) throw std::invalid_argument("interlacement matrix must have zero diagonal");
    for (int j = i + 1; j < n; ++j) {
      if (adjacency_.get(i, j)) edges_.push_back({i, j});
    }
  }
}

InterlacementGraph InterlacementGraph::from_diagram(const ChordDiagram& d) {
  const int n = d.chord_count();
  Gf2Matrix m(n);
  for (int a = 0; a < n; ++a) {
    const auto [p, q] = d.chord(a);
    for (int b = a + 1; b < n; ++b) {
      const auto [r, s] = d.chord(b);
      const bool r_inside = p < r && r < q;
      const bool s_inside = p < s && s < q;
      if (r_inside != s_inside) {
        m.set(a, b);
        m.set(b, a);
      }
    }
  }
  return InterlacementGraph(std::move(m));
}

int InterlacementGraph::degree(int i) const {
  int d = 0;
  for (auto w : adjacency_.row(i)) d += std::popcount(w);
  return d;
}

std::vector<int> InterlacementGraph::neighbors(int i) const { return adjacency_.row_vector(i).ones(); }

std::vector<std::vector<int>> InterlacementGraph::adjacency_lists() const {
  std::vector<std::vector<int>> lists(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) lists[i] = neighbors(i);
  return lists;
}

bool InterlacementGraph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  BitVector seen(n);
  std::vector<int> stack{0};
  seen.set(0);
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : neighbors(u)) {
      if (seen.test(v)) continue;
      seen.set(v);
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == n;
}

int common_neighbor_count(const InterlacementGraph& g, int i, int j) {
  const auto a = g.adjacency().row(i);
  const auto b = g.adjacency().row(j);
  int c = 0;
  for (std::size_t k = 0; k < a.size(); ++k) c += std::popcount(a[k] & b[k]);
  return c;
}

bool common_neighbor_parity(const InterlacementGraph& g, int i, int j) { return common_neighbor_count(g, i, j) & 1; }

WeightedInterlacementGraph::WeightedInterlacementGraph(InterlacementGraph base)
    : base_(std::move(base)), squared_(square(base_.adjacency())) {
  weights_.reserve(base_.edges().size());
  for (const Edge& e : base_.edges()) weights_.push_back(squared_.get(e.u, e.v));
}

std::vector<Edge> WeightedInterlacementGraph::odd_edges() const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k]) out.push_back(base_.edges()[k]);
  }
  return out;
}

}  // namespace gauss
