#pragma once

#include <span>
#include <variant>
#include <vector>

#include "gauss/interlace.h"

namespace gauss {

/// color[v] in {0, 1}; each BFS component root gets 0.
struct TwoColoring {
  std::vector<int> color;
};

/// Vertices of an odd cycle in order; the last is adjacent to the first.
struct OddCycle {
  std::vector<int> vertices;
};

using TwoColorResult = std::variant<TwoColoring, OddCycle>;

/// BFS 2-coloring, components in vertex order, neighbors in edge order.
TwoColorResult two_color(int vertex_count, std::span<const Edge> edges);

inline bool is_bipartite(const TwoColorResult& r) { return std::holds_alternative<TwoColoring>(r); }

}  // namespace gauss
