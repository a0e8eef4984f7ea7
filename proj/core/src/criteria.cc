#include "gauss/criteria.h"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gauss {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

CriterionReport make_report(Criterion c, int chord_count, bool verdict, Witness witness = {}) {
  CriterionReport r;
  r.criterion = c;
  r.chord_count = chord_count;
  r.verdict = verdict;
  r.witness = std::move(witness);
  return r;
}

// First evenness violation, if any.
std::optional<Witness> evenness_violation(const InterlacementGraph& g) {
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    const int d = g.degree(i);
    if (d % 2 != 0) return witness::OddDegree{i, d};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      const int c = common_neighbor_count(g, i, j);
      if (c % 2 != 0) return witness::OddCommonNeighbors{i, j, c};
    }
  }
  return std::nullopt;
}

std::string vertex_name(int v, int chord_count) {
  if (v < chord_count) return std::to_string(v + 1);
  return "u" + std::to_string(v - chord_count + 1);
}

std::string join_vertices(std::span<const int> vs, int chord_count) {
  std::string s;
  for (int v : vs) {
    if (!s.empty()) s += ",";
    s += vertex_name(v, chord_count);
  }
  return s;
}

// Tree path u -> lca -> v using BFS parents.
std::vector<int> tree_cycle(const std::vector<int>& parent, const std::vector<int>& depth, int u, int v) {
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
  up_u.insert(up_u.end(), up_v.rbegin(), up_v.rend());
  return up_u;
}

}  // namespace

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Evenness:
      return "evenness";
    case Criterion::GaussParity:
      return "gauss-parity";
    case Criterion::GL123:
      return "gl123";
    case Criterion::StzLinearSystem:
      return "stz";
    case Criterion::CycleWeight:
      return "cycle";
    case Criterion::DehnUntangling:
      return "dehn";
    case Criterion::TouchBipartite:
      return "touch";
    case Criterion::BipartiteModified:
      return "bipartite";
    case Criterion::StzBruteforce:
      return "stz-bruteforce";
  }
  return "unknown";
}

bool is_exact(Criterion c) {
  switch (c) {
    case Criterion::StzLinearSystem:
    case Criterion::CycleWeight:
    case Criterion::DehnUntangling:
    case Criterion::BipartiteModified:
    case Criterion::StzBruteforce:
      return true;
    default:
      return false;
  }
}

std::string describe_witness(const CriterionReport& report) {
  const int n = report.chord_count;
  std::ostringstream out;
  std::visit(Overloaded{
                 [](const std::monostate&) {},
                 [&](const witness::OddDegree& w) {
                   out << "vertex " << w.vertex + 1 << " has odd degree " << w.degree << '\n';
                 },
                 [&](const witness::OddCommonNeighbors& w) {
                   out << "non-adjacent vertices " << w.u + 1 << " and " << w.v + 1 << " share " << w.count
                       << " common neighbors\n";
                 },
                 [&](const witness::OddSeparation& w) {
                   out << "symbol " << w.symbol + 1 << " encloses " << w.between << " symbols\n";
                 },
                 [&](const witness::TriangleParity& w) {
                   out << "interleaved triple (" << w.i + 1 << "," << w.j + 1 << "," << w.k + 1
                       << ") has even common-neighbor parity sum\n";
                 },
                 [&](const witness::InconsistentEquations& w) {
                   out << "inconsistent equations:\n";
                   for (std::size_t k = 0; k < w.equations.size(); ++k) {
                     out << "  " << format_equation(w.equations[k]);
                     if (w.equations[k].is_constant()) {
                       out << "  (pair " << w.pairs[k].u + 1 << "," << w.pairs[k].v + 1 << ")";
                     }
                     out << '\n';
                   }
                 },
                 [&](const witness::Solution& w) {
                   out << "solution: " << format_solution_family(w.values, w.null_basis) << '\n';
                 },
                 [&](const witness::CycleViolation& w) {
                   out << "cycle (" << join_vertices(w.cycle, n) << ") has length " << w.cycle.size()
                       << " but weight sum " << w.weight_sum << '\n';
                 },
                 [&](const witness::DiagonalSet& w) {
                   std::vector<int> k(w.support.begin(), w.support.end());
                   out << "M + D is idempotent for K = {" << join_vertices(k, n) << "}\n";
                 },
                 [&](const TwoColoring& w) {
                   std::vector<int> parts[2];
                   for (int v = 0; v < static_cast<int>(w.color.size()); ++v) parts[w.color[v]].push_back(v);
                   out << "parts {" << join_vertices(parts[0], n) << "} / {" << join_vertices(parts[1], n) << "}\n";
                 },
                 [&](const OddCycle& w) { out << "odd cycle (" << join_vertices(w.vertices, n) << ")\n"; },
             },
             report.witness);
  if (!report.reversal_trace.empty()) {
    out << "reversal trace:\n";
    for (const auto& word : report.reversal_trace) {
      out << "  ";
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (n > 9 && i > 0) out << ' ';
        out << word[i] + 1;
      }
      out << '\n';
    }
  }
  return out.str();
}

CriterionReport check_evenness(const InterlacementGraph& g) {
  const int n = g.vertex_count();
  if (auto v = evenness_violation(g)) return make_report(Criterion::Evenness, n, false, std::move(*v));
  return make_report(Criterion::Evenness, n, true);
}

CriterionReport check_gauss_parity(std::span<const Symbol> word) {
  const ChordDiagram d = ChordDiagram::from_word(word);
  const int n = d.chord_count();
  for (Symbol s = 0; s < n; ++s) {
    const auto [p, q] = d.chord(s);
    const int between = q - p - 1;
    if (between % 2 != 0) return make_report(Criterion::GaussParity, n, false, witness::OddSeparation{s, between});
  }
  return make_report(Criterion::GaussParity, n, true);
}

CriterionReport check_gl123(const InterlacementGraph& g) {
  const int n = g.vertex_count();
  const Gf2Matrix m2 = square(g.adjacency());
  for (int i = 0; i < n; ++i) {
    if (m2.get(i, i)) return make_report(Criterion::GL123, n, false, witness::OddDegree{i, g.degree(i)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j) && m2.get(i, j)) {
        return make_report(Criterion::GL123, n, false,
                           witness::OddCommonNeighbors{i, j, common_neighbor_count(g, i, j)});
      }
    }
  }
  for (const Edge& e : g.edges()) {
    for (int k = e.v + 1; k < n; ++k) {
      if (!g.adjacent(e.u, k) || !g.adjacent(e.v, k)) continue;
      const bool sum = m2.get(e.u, e.v) ^ m2.get(e.u, k) ^ m2.get(e.v, k);
      if (!sum) return make_report(Criterion::GL123, n, false, witness::TriangleParity{e.u, e.v, k});
    }
  }
  return make_report(Criterion::GL123, n, true);
}

Gf2System realizability_system(const InterlacementGraph& g) {
  const int n = g.vertex_count();
  const Gf2Matrix m2 = square(g.adjacency());
  Gf2System system(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (i != j && g.adjacent(i, j)) {
        system.add({i, j}, !m2.get(i, j));
      } else {
        system.add({}, m2.get(i, j));
      }
    }
  }
  return system;
}

std::vector<Edge> realizability_system_pairs(int vertex_count) {
  std::vector<Edge> pairs;
  for (int i = 0; i < vertex_count; ++i) {
    for (int j = i; j < vertex_count; ++j) pairs.push_back({i, j});
  }
  return pairs;
}

CriterionReport check_stz_linear(const InterlacementGraph& g) {
  const int n = g.vertex_count();
  const Gf2System system = realizability_system(g);
  const auto pairs = realizability_system_pairs(n);

  for (std::size_t k = 0; k < system.size(); ++k) {
    if (system[k].is_constant() && system[k].rhs) {
      return make_report(Criterion::StzLinearSystem, n, false, witness::InconsistentEquations{{system[k]}, {pairs[k]}});
    }
  }

  Gf2Solution sol = solve(system);
  if (sol.consistent) {
    return make_report(Criterion::StzLinearSystem, n, true,
                       witness::Solution{std::move(*sol.particular), std::move(sol.null_basis)});
  }
  witness::InconsistentEquations w;
  for (int k : minimize_conflict(system, sol.conflict)) {
    w.equations.push_back(system[k]);
    w.pairs.push_back(pairs[k]);
  }
  return make_report(Criterion::StzLinearSystem, n, false, std::move(w));
}

bool stz_system_consistent(const InterlacementGraph& g) { return solve(realizability_system(g)).consistent; }

bool cycle_condition_holds(const WeightedInterlacementGraph& w, std::span<const int> cycle) {
  const auto& g = w.base();
  const std::size_t len = cycle.size();
  int sum = 0;
  for (std::size_t k = 0; k < len; ++k) {
    const int a = cycle[k];
    const int b = cycle[(k + 1) % len];
    if (!g.adjacent(a, b)) throw std::invalid_argument("cycle uses a non-edge");
    sum += w.weight(a, b);
  }
  return sum % 2 == static_cast<int>(len % 2);
}

CriterionReport check_cycle_weight(const WeightedInterlacementGraph& w) {
  const auto& g = w.base();
  const int n = g.vertex_count();
  if (auto v = evenness_violation(g)) return make_report(Criterion::CycleWeight, n, false, std::move(*v));

  // Spanning forest labeling with X_u + X_v = w(u, v) + 1 along tree edges.
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<int> label(n, -1);
  const auto adj = g.adjacency_lists();
  for (int root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    label[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (label[v] >= 0) continue;
        label[v] = label[u] ^ !w.weight(u, v);
        parent[v] = u;
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }

  for (const Edge& e : g.edges()) {
    if (parent[e.v] == e.u || parent[e.u] == e.v) continue;
    if ((label[e.u] ^ label[e.v]) == !w.weight(e.u, e.v)) continue;
    witness::CycleViolation violation;
    violation.cycle = tree_cycle(parent, depth, e.u, e.v);
    const std::size_t len = violation.cycle.size();
    for (std::size_t k = 0; k < len; ++k) violation.weight_sum += w.weight(violation.cycle[k], violation.cycle[(k + 1) % len]);
    return make_report(Criterion::CycleWeight, n, false, std::move(violation));
  }

  BitVector values(n);
  for (int i = 0; i < n; ++i) values.set(i, label[i] == 1);
  return make_report(Criterion::CycleWeight, n, true, witness::Solution{std::move(values), {}});
}

DehnResult dehn_transform(std::span<const Symbol> input) {
  const int n = ChordDiagram::from_word(input).chord_count();
  DehnResult result;
  result.word.assign(input.begin(), input.end());
  auto& word = result.word;
  for (Symbol s = 0; s < n; ++s) {
    const auto first = std::find(word.begin(), word.end(), s);
    const auto last = std::find(first + 1, word.end(), s);
    std::reverse(first, last + 1);
    result.trace.push_back(word);
  }
  return result;
}

CriterionReport check_dehn(std::span<const Symbol> word) {
  CriterionReport parity = check_gauss_parity(word);
  const int n = parity.chord_count;
  if (!parity.verdict) return make_report(Criterion::DehnUntangling, n, false, std::move(parity.witness));

  DehnResult untangled = dehn_transform(word);
  const auto g = InterlacementGraph::from_diagram(ChordDiagram::from_word(untangled.word));
  TwoColorResult coloring = two_color(n, g.edges());
  const bool bipartite = is_bipartite(coloring);
  CriterionReport r = make_report(
      Criterion::DehnUntangling, n, bipartite,
      std::visit([](auto&& c) -> Witness { return std::forward<decltype(c)>(c); }, std::move(coloring)));
  r.reversal_trace = std::move(untangled.trace);
  return r;
}

CriterionReport check_touch(std::span<const Symbol> word) {
  const auto g = InterlacementGraph::from_diagram(ChordDiagram::from_word(word));
  const int n = g.vertex_count();
  TwoColorResult coloring = two_color(n, g.edges());
  const bool bipartite = is_bipartite(coloring);
  return make_report(Criterion::TouchBipartite, n, bipartite,
                     std::visit([](auto&& c) -> Witness { return std::forward<decltype(c)>(c); }, std::move(coloring)));
}

ModifiedGraph build_modified_graph(const WeightedInterlacementGraph& w) {
  const auto& edges = w.base().edges();
  ModifiedGraph m;
  m.original_count = w.base().vertex_count();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (!w.weights()[k]) {
      m.edges.push_back(e);
      continue;
    }
    const int mid = m.original_count + static_cast<int>(m.subdivided.size());
    m.subdivided.push_back(e);
    m.edges.push_back({e.u, mid});
    m.edges.push_back({e.v, mid});
  }
  return m;
}

CriterionReport check_main_theorem(const InterlacementGraph& g) {
  const int n = g.vertex_count();
  if (auto v = evenness_violation(g)) return make_report(Criterion::BipartiteModified, n, false, std::move(*v));

  const ModifiedGraph modified = build_modified_graph(WeightedInterlacementGraph(g));
  TwoColorResult coloring = two_color(modified.vertex_count(), modified.edges);
  if (auto* cycle = std::get_if<OddCycle>(&coloring)) {
    return make_report(Criterion::BipartiteModified, n, false, std::move(*cycle));
  }
  const auto& color = std::get<TwoColoring>(coloring).color;
  BitVector values(n);
  for (int i = 0; i < n; ++i) values.set(i, color[i] == 1);
  return make_report(Criterion::BipartiteModified, n, true, witness::Solution{std::move(values), {}});
}

CriterionReport check_main_theorem(std::span<const Symbol> word) {
  return check_main_theorem(InterlacementGraph::from_diagram(ChordDiagram::from_word(word)));
}

CriterionReport check_stz_bruteforce(const InterlacementGraph& g) {
  const int n = g.vertex_count();
  if (auto k = stz_bruteforce(g.adjacency())) {
    return make_report(Criterion::StzBruteforce, n, true, witness::DiagonalSet{std::move(*k)});
  }
  return make_report(Criterion::StzBruteforce, n, false);
}

std::vector<CriterionReport> check_all(std::span<const Symbol> word) {
  const auto g = InterlacementGraph::from_diagram(ChordDiagram::from_word(word));
  const WeightedInterlacementGraph w(g);
  std::vector<CriterionReport> reports;
  reports.push_back(check_evenness(g));
  reports.push_back(check_gauss_parity(word));
  reports.push_back(check_gl123(g));
  reports.push_back(check_stz_linear(g));
  reports.push_back(check_cycle_weight(w));
  reports.push_back(check_dehn(word));
  reports.push_back(check_touch(word));
  reports.push_back(check_main_theorem(g));
  if (g.vertex_count() <= kMaxBruteforceDimension) reports.push_back(check_stz_bruteforce(g));

  const bool reference = reports[3].verdict;
  for (const auto& r : reports) {
    if (is_exact(r.criterion) && r.verdict != reference) {
      throw CriteriaDisagree("criteria disagree on " + format_word(word) + ": " + std::string(criterion_name(r.criterion)) +
                             " says " + (r.verdict ? "realizable" : "not realizable"));
    }
  }
  return reports;
}

}  // namespace gauss
