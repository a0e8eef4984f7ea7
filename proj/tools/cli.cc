#include "cli.h"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gauss/code.h"
#include "gauss/criteria.h"
#include "gauss/gf2.h"
#include "gauss/interlace.h"
#include "gauss/render.h"
#include "gauss/tablegen.h"

namespace gauss::cli {
namespace {

constexpr Criterion kAllCriteria[] = {
    Criterion::Evenness,       Criterion::GaussParity,    Criterion::GL123,
    Criterion::StzLinearSystem, Criterion::CycleWeight,   Criterion::DehnUntangling,
    Criterion::TouchBipartite, Criterion::BipartiteModified, Criterion::StzBruteforce,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

std::optional<Criterion> criterion_from_name(const std::string& name) {
  for (Criterion c : kAllCriteria) {
    if (criterion_name(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<std::string> criterion_choices() {
  std::vector<std::string> names{"all"};
  for (Criterion c : kAllCriteria) names.emplace_back(criterion_name(c));
  return names;
}

InterlacementGraph graph_of(std::span<const Symbol> word) {
  return InterlacementGraph::from_diagram(ChordDiagram::from_word(word));
}

CriterionReport evaluate(Criterion c, std::span<const Symbol> word) {
  switch (c) {
    case Criterion::Evenness:
      return check_evenness(graph_of(word));
    case Criterion::GaussParity:
      return check_gauss_parity(word);
    case Criterion::GL123:
      return check_gl123(graph_of(word));
    case Criterion::StzLinearSystem:
      return check_stz_linear(graph_of(word));
    case Criterion::CycleWeight:
      return check_cycle_weight(WeightedInterlacementGraph(graph_of(word)));
    case Criterion::DehnUntangling:
      return check_dehn(word);
    case Criterion::TouchBipartite:
      return check_touch(word);
    case Criterion::BipartiteModified:
      return check_main_theorem(word);
    case Criterion::StzBruteforce:
      return check_stz_bruteforce(graph_of(word));
  }
  throw std::logic_error("unknown criterion");
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

void indent(std::ostream& out, const std::string& text, int spaces) {
  for (const auto& line : split_lines(text)) out << std::string(spaces, ' ') << line << '\n';
}

// --- check ---------------------------------------------------------------

struct CheckOptions {
  std::vector<std::string> code;
  std::string criterion = "all";
  bool witness = false;
  bool json = false;
};

struct CheckOutcome {
  bool verdict = false;
  std::vector<CriterionReport> reports;
};

CheckOutcome run_check(std::span<const Symbol> word, const std::string& criterion) {
  CheckOutcome r;
  if (criterion == "all") {
    r.reports = check_all(word);
    for (const auto& rep : r.reports) {
      if (rep.criterion == Criterion::StzLinearSystem) r.verdict = rep.verdict;
    }
  } else {
    r.reports.push_back(evaluate(*criterion_from_name(criterion), word));
    r.verdict = r.reports.front().verdict;
  }
  return r;
}

std::string headline(const std::string& criterion, bool verdict) {
  if (criterion == "all" || is_exact(*criterion_from_name(criterion))) {
    return verdict ? "realizable" : "not realizable";
  }
  if (criterion == "touch") return verdict ? "touch-realizable" : "not touch-realizable";
  return criterion + (verdict ? ": pass" : ": fail");
}

nlohmann::json check_json(std::span<const Symbol> word, const std::string& criterion, const CheckOutcome& outcome,
                          bool with_witness) {
  nlohmann::json j;
  j["code"] = format_word(word);
  j["n"] = word.size() / 2;
  j["criterion"] = criterion;
  j["verdict"] = outcome.verdict;
  if (criterion == "all" || is_exact(*criterion_from_name(criterion))) j["realizable"] = outcome.verdict;
  auto results = nlohmann::json::array();
  for (const auto& rep : outcome.reports) {
    nlohmann::json r{{"criterion", criterion_name(rep.criterion)}, {"exact", is_exact(rep.criterion)},
                     {"verdict", rep.verdict}};
    if (with_witness) r["witness"] = split_lines(describe_witness(rep));
    results.push_back(std::move(r));
  }
  j["results"] = std::move(results);
  return j;
}

void print_check_text(std::ostream& out, const std::string& criterion, const CheckOutcome& outcome,
                      bool with_witness) {
  out << headline(criterion, outcome.verdict) << '\n';
  if (criterion == "all") {
    for (const auto& rep : outcome.reports) {
      std::string name(criterion_name(rep.criterion));
      name.resize(16, ' ');
      out << "  " << name << (rep.verdict ? "pass" : "fail") << '\n';
      if (with_witness) indent(out, describe_witness(rep), 4);
    }
  } else if (with_witness) {
    indent(out, describe_witness(outcome.reports.front()), 2);
  }
}

int check_batch(const CheckOptions& opt, std::istream& in, std::ostream& out) {
  int status = kExitRealizable;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      const auto word = parse_word(line);
      const CheckOutcome outcome = run_check(word, opt.criterion);
      out << check_json(word, opt.criterion, outcome, opt.witness).dump() << '\n';
      if (!outcome.verdict && status == kExitRealizable) status = kExitNotRealizable;
    } catch (const std::exception& e) {
      out << nlohmann::json{{"input", line}, {"error", e.what()}}.dump() << '\n';
      status = kExitInputError;
    }
  }
  return status;
}

int cmd_check(const CheckOptions& opt, std::istream& in, std::ostream& out) {
  if (opt.code.empty() || (opt.code.size() == 1 && opt.code.front() == "-")) return check_batch(opt, in, out);
  const auto word = parse_word(join(opt.code));
  const CheckOutcome outcome = run_check(word, opt.criterion);
  if (opt.json) {
    out << check_json(word, opt.criterion, outcome, opt.witness).dump() << '\n';
  } else {
    print_check_text(out, opt.criterion, outcome, opt.witness);
  }
  return outcome.verdict ? kExitRealizable : kExitNotRealizable;
}

// --- solve ---------------------------------------------------------------

struct SolveOptions {
  std::vector<std::string> code;
  bool json = false;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
  const auto word = parse_word(join(opt.code));
  const auto g = graph_of(word);
  const Gf2System system = realizability_system(g);

  std::vector<std::string> equations;
  for (const auto& eq : system.equations()) {
    if (eq.is_constant() && !eq.rhs) continue;
    equations.push_back(format_equation(eq));
  }
  const Gf2Solution solution = solve(system);

  if (opt.json) {
    nlohmann::json j{{"code", format_word(word)}, {"n", word.size() / 2}, {"equations", equations},
                     {"consistent", solution.consistent}};
    if (solution.consistent) {
      j["solution"] = format_solution_family(*solution.particular, solution.null_basis);
      j["free_variables"] = solution.free_vars.size();
    } else {
      const auto report = check_stz_linear(g);
      const auto& w = std::get<witness::InconsistentEquations>(report.witness);
      auto conflict = nlohmann::json::array();
      for (const auto& eq : w.equations) conflict.push_back(format_equation(eq));
      j["conflict"] = std::move(conflict);
    }
    out << j.dump() << '\n';
  } else {
    out << "equations: " << equations.size() << '\n';
    for (const auto& eq : equations) out << "  " << eq << '\n';
    if (solution.consistent) {
      out << "solution: " << format_solution_family(*solution.particular, solution.null_basis) << '\n';
      out << "free variables: " << solution.free_vars.size() << '\n';
    } else {
      out << describe_witness(check_stz_linear(g));
    }
    out << (solution.consistent ? "realizable" : "not realizable") << '\n';
  }
  return solution.consistent ? kExitRealizable : kExitNotRealizable;
}

// --- table ---------------------------------------------------------------

struct TableCliOptions {
  int from = 3;
  int to = 9;
  bool gap = false;
  unsigned jobs = 0;
  bool allow_long = false;
  bool json = false;
};

unsigned resolve_jobs(unsigned requested) {
  if (const char* env = std::getenv("GAUSS_JOBS"); env != nullptr && *env != '\0') {
    unsigned value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
      throw UsageError(std::string("GAUSS_JOBS must be a positive integer, got '") + env + "'");
    }
    return value;
  }
  return requested == 0 ? default_jobs() : requested;
}

int cmd_table(const TableCliOptions& opt, std::ostream& out) {
  if (opt.from < 1 || opt.to > kMaxTableChords || opt.from > opt.to) {
    throw UsageError("bounds must satisfy 1 <= from <= to <= " + std::to_string(kMaxTableChords));
  }
  if (opt.to >= kLongTableChords && !opt.allow_long) {
    throw UsageError("sizes " + std::to_string(kLongTableChords) + " and up run for hours; pass --allow-long");
  }
  TableOptions options;
  options.collect_gap = opt.gap;
  options.jobs = resolve_jobs(opt.jobs);
  const auto rows = count_table(opt.from, opt.to, options);
  if (opt.json) {
    out << table_to_json(rows).dump() << '\n';
    return kExitRealizable;
  }
  out << format_table(rows);
  if (opt.gap) {
    for (const auto& row : rows) {
      if (row.gap_count == 0) continue;
      out << "gap n=" << row.n << " (" << row.gap_count << "):\n";
      for (const auto& code : row.gap_examples) out << "  " << format_code(code) << '\n';
      if (row.gap_examples.size() < row.gap_count) out << "  ...\n";
    }
  }
  return kExitRealizable;
}

// --- render --------------------------------------------------------------

struct RenderOptions {
  std::vector<std::string> code;
  std::string what = "graph";
  std::string format = "dot";
};

int cmd_render(const RenderOptions& opt, std::ostream& out) {
  const auto word = parse_word(join(opt.code));
  const RenderFormat format = *parse_render_format(opt.format);
  if (opt.what == "diagram") {
    out << render_diagram(ChordDiagram::from_word(word), format);
  } else if (opt.what == "graph") {
    out << render_graph(graph_of(word), format);
  } else if (opt.what == "weighted") {
    out << render_weighted(WeightedInterlacementGraph(graph_of(word)), format);
  } else if (opt.what == "modified") {
    out << render_modified(build_modified_graph(WeightedInterlacementGraph(graph_of(word))), format);
  } else {
    out << render_dehn(word, format);
  }
  return kExitRealizable;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether Gauss diagrams are realizable by closed plane curves", "gauss"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Check realizability; reads one code per line from stdin when no code is given");
  check_cmd->add_option("code", check.code, "Gauss code, e.g. 12334124 or '1 2 3 1 2 3'");
  check_cmd->add_option("-c,--criterion", check.criterion, "Criterion to apply")
      ->check(CLI::IsMember(criterion_choices()))
      ->capture_default_str();
  check_cmd->add_flag("-w,--witness", check.witness, "Print witnesses");
  check_cmd->add_flag("--json", check.json, "Emit one JSON object");

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "Print the GF(2) realizability system and its solutions");
  solve_cmd->add_option("code", solve_opt.code, "Gauss code")->required();
  solve_cmd->add_flag("--json", solve_opt.json, "Emit one JSON object");

  TableCliOptions table;
  auto* table_cmd = app.add_subcommand("table", "Count realizable classes of prime diagrams by size");
  table_cmd->add_option("--from", table.from, "Smallest size")->capture_default_str();
  table_cmd->add_option("--to", table.to, "Largest size")->capture_default_str();
  table_cmd->add_flag("--gap", table.gap, "List classes passing gl123 but not realizable");
  table_cmd->add_option("-j,--jobs", table.jobs, "Worker threads (GAUSS_JOBS overrides; default: all cores)");
  table_cmd->add_flag("--allow-long", table.allow_long, "Permit sizes 11 and 12");
  table_cmd->add_flag("--json", table.json, "Emit JSON");

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Emit a DOT or TikZ drawing");
  render_cmd->add_option("code", render.code, "Gauss code")->required();
  render_cmd->add_option("--what", render.what, "diagram, graph, weighted, modified or dehn")
      ->check(CLI::IsMember({"diagram", "graph", "weighted", "modified", "dehn"}))
      ->capture_default_str();
  render_cmd->add_option("--format", render.format, "dot or tikz")
      ->check(CLI::IsMember({"dot", "tikz"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*check_cmd) return cmd_check(check, in, out);
    if (*solve_cmd) return cmd_solve(solve_opt, out);
    if (*table_cmd) return cmd_table(table, out);
    return cmd_render(render, out);
  } catch (const CodeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DimensionTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace gauss::cli
