#include "gauss/bipartite.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gauss {

TwoColorResult two_color(int vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<int>> adj(vertex_count);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw std::out_of_range("edge endpoint out of range");
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  std::vector<int> color(vertex_count, -1);
  std::vector<int> parent(vertex_count, -1);
  std::vector<int> depth(vertex_count, 0);

  for (int root = 0; root < vertex_count; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
          continue;
        }
        if (color[v] != color[u]) continue;

        // Same color: both tree paths meet at the lowest common ancestor.
        std::vector<int> up_u{u};
        std::vector<int> up_v{v};
        int a = u;
        int b = v;
        while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
        while (a != b) {
          up_u.push_back(a = parent[a]);
          up_v.push_back(b = parent[b]);
        }
        up_v.pop_back();
        std::reverse(up_v.begin(), up_v.end());
        OddCycle cycle;
        cycle.vertices = std::move(up_u);
        cycle.vertices.insert(cycle.vertices.end(), up_v.begin(), up_v.end());
        return cycle;
      }
    }
  }
  return TwoColoring{std::move(color)};
}

}  // namespace gauss
