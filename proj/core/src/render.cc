#include "gauss/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

namespace gauss {
namespace {

struct Node {
  std::string name;
  std::string label;
  double angle = 0;  // degrees
  double radius = 2.0;
  bool small = false;
};

struct Line {
  int a = 0;
  int b = 0;
  bool bold = false;
  bool outline = false;  // arc of the base circle, not a chord or edge
};

struct Scene {
  std::vector<Node> nodes;
  std::vector<Line> lines;
  bool circle = false;
};

double slot_angle(int k, int count) { return 90.0 - 360.0 * k / std::max(count, 1); }

std::string fmt(const char* pattern, double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x, y);
  return buf;
}

std::string emit_dot(const Scene& s) {
  std::string out = "graph G {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
  for (const Node& n : s.nodes) {
    const double rad = n.angle * std::numbers::pi / 180.0;
    out += "  " + n.name + " [label=\"" + n.label + "\"";
    if (n.small) out += ", shape=point, xlabel=\"" + n.label + "\"";
    out += ", pos=\"" + fmt("%.3f,%.3f", n.radius * std::cos(rad), n.radius * std::sin(rad)) + "!\"];\n";
  }
  for (const Line& l : s.lines) {
    out += "  " + s.nodes[l.a].name + " -- " + s.nodes[l.b].name;
    if (l.bold) out += " [style=bold, penwidth=3]";
    if (l.outline) out += " [style=dotted, color=gray]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string emit_tikz(const Scene& s) {
  std::string out = "\\begin{tikzpicture}\n";
  if (s.circle) out += "  \\draw[gray] (0,0) circle (2);\n";
  for (const Node& n : s.nodes) {
    if (s.circle) {
      out += "  \\coordinate (" + n.name + ") at " + fmt("(%.2f:%.2f)", n.angle, n.radius) + ";\n";
      out += "  \\fill (" + n.name + ") circle (1.5pt);\n";
      out += "  \\node at " + fmt("(%.2f:%.2f)", n.angle, n.radius + 0.35) + " {" + n.label + "};\n";
    } else if (n.small) {
      out += "  \\node[circle, fill, inner sep=1pt, label=right:{$" + n.label + "$}] (" + n.name + ") at " +
             fmt("(%.2f:%.2f)", n.angle, n.radius) + " {};\n";
    } else {
      out += "  \\node[circle, draw, inner sep=2pt] (" + n.name + ") at " + fmt("(%.2f:%.2f)", n.angle, n.radius) +
             " {" + n.label + "};\n";
    }
  }
  for (const Line& l : s.lines) {
    if (l.outline) continue;
    out += std::string("  \\draw") + (l.bold ? "[very thick]" : "") + " (" + s.nodes[l.a].name + ") -- (" +
           s.nodes[l.b].name + ");\n";
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

std::string emit(const Scene& s, RenderFormat format) {
  return format == RenderFormat::Dot ? emit_dot(s) : emit_tikz(s);
}

Scene diagram_scene(const ChordDiagram& d, std::span<const Symbol> labels) {
  Scene s;
  s.circle = true;
  const int points = d.point_count();
  for (int p = 0; p < points; ++p) {
    s.nodes.push_back({"p" + std::to_string(p + 1), std::to_string(labels[p] + 1), slot_angle(p, points)});
  }
  for (int p = 0; p + 1 < points; ++p) s.lines.push_back({p, p + 1, false, true});
  if (points > 2) s.lines.push_back({points - 1, 0, false, true});
  for (const auto& [p, q] : d.chords()) s.lines.push_back({p, q});
  return s;
}

Scene graph_scene(const InterlacementGraph& g, const std::vector<bool>* bold) {
  Scene s;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) s.nodes.push_back({std::to_string(v + 1), std::to_string(v + 1), slot_angle(v, n)});
  const auto& edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    s.lines.push_back({edges[k].u, edges[k].v, bold != nullptr && (*bold)[k]});
  }
  return s;
}

}  // namespace

std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "dot") return RenderFormat::Dot;
  if (name == "tikz") return RenderFormat::Tikz;
  return std::nullopt;
}

std::string render_diagram(const ChordDiagram& d, RenderFormat format) {
  const auto word = d.word();
  return emit(diagram_scene(d, word), format);
}

std::string render_graph(const InterlacementGraph& g, RenderFormat format) {
  return emit(graph_scene(g, nullptr), format);
}

std::string render_weighted(const WeightedInterlacementGraph& w, RenderFormat format) {
  return emit(graph_scene(w.base(), &w.weights()), format);
}

std::string render_modified(const ModifiedGraph& m, RenderFormat format) {
  Scene s;
  const int n = m.original_count;
  for (int v = 0; v < n; ++v) s.nodes.push_back({std::to_string(v + 1), std::to_string(v + 1), slot_angle(v, n)});
  for (std::size_t k = 0; k < m.subdivided.size(); ++k) {
    // Midpoint of the original edge, kept off the center.
    const double da = s.nodes[m.subdivided[k].u].angle;
    const double ra = da * std::numbers::pi / 180.0;
    const double rb = s.nodes[m.subdivided[k].v].angle * std::numbers::pi / 180.0;
    const double x = std::cos(ra) + std::cos(rb);
    const double y = std::sin(ra) + std::sin(rb);
    double radius = std::hypot(x, y);
    double angle = std::atan2(y, x) * 180.0 / std::numbers::pi;
    if (radius < 1e-9) angle = da + 90.0;
    radius = std::max(radius, 0.4);
    const std::string name = "u" + std::to_string(k + 1);
    s.nodes.push_back({name, name, angle, radius, true});
  }
  for (const Edge& e : m.edges) s.lines.push_back({e.u, e.v});
  return emit(s, format);
}

std::string render_dehn(std::span<const Symbol> word, RenderFormat format) {
  const DehnResult result = dehn_transform(word);
  const ChordDiagram d = ChordDiagram::from_word(result.word);
  return emit(diagram_scene(d, result.word), format);
}

}  // namespace gauss
