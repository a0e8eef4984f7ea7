#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gauss/bipartite.h"
#include "gauss/code.h"
#include "gauss/gf2.h"
#include "gauss/interlace.h"

namespace gauss {

enum class Criterion {
  Evenness,
  GaussParity,
  GL123,
  StzLinearSystem,
  CycleWeight,
  DehnUntangling,
  TouchBipartite,
  BipartiteModified,
  StzBruteforce,
};

std::string_view criterion_name(Criterion c);
/// The criteria that decide realizability exactly (the others are necessary
/// conditions, or decide touch-realizability).
bool is_exact(Criterion c);

namespace witness {

struct OddDegree {
  int vertex = 0;
  int degree = 0;
};

/// Non-adjacent pair with an odd number of common neighbors.
struct OddCommonNeighbors {
  int u = 0;
  int v = 0;
  int count = 0;
};

/// Symbol whose two occurrences enclose an odd number of positions.
struct OddSeparation {
  Symbol symbol = 0;
  int between = 0;
};

/// Pairwise-interleaved triple whose common-neighbor parities sum to 0.
struct TriangleParity {
  int i = 0;
  int j = 0;
  int k = 0;
};

/// Equations of realizability_system summing to 0 = 1, with the vertex pair
/// each one came from (u == v for a diagonal constraint).
struct InconsistentEquations {
  std::vector<Gf2Equation> equations;
  std::vector<Edge> pairs;
};

/// A satisfying assignment; null_basis spans the remaining solutions when known.
struct Solution {
  BitVector values;
  std::vector<BitVector> null_basis;
};

/// Fundamental cycle whose weight sum differs in parity from its length.
struct CycleViolation {
  std::vector<int> cycle;
  int weight_sum = 0;
};

/// K with M + D_K idempotent.
struct DiagonalSet {
  std::vector<int> support;
};

}  // namespace witness

using Witness = std::variant<std::monostate, witness::OddDegree, witness::OddCommonNeighbors, witness::OddSeparation,
                             witness::TriangleParity, witness::InconsistentEquations, witness::Solution,
                             witness::CycleViolation, witness::DiagonalSet, TwoColoring, OddCycle>;

struct CriterionReport {
  Criterion criterion = Criterion::Evenness;
  bool verdict = false;
  /// Vertices numbered at or above this in a witness are subdivision vertices.
  int chord_count = 0;
  Witness witness;
  /// Dehn only: the word after each reversal, in the input's labels.
  std::vector<std::vector<Symbol>> reversal_trace;
};

/// Multi-line human-readable witness with 1-based vertex and symbol names.
std::string describe_witness(const CriterionReport& report);

/// Degrees even and every non-adjacent pair has an even common-neighbor count.
CriterionReport check_evenness(const InterlacementGraph& g);

// Criteria taking a word accept any labeling of 0..n-1 and report witnesses in
// those labels; the GaussCode overloads use first-occurrence labels.

CriterionReport check_gauss_parity(std::span<const Symbol> word);
inline CriterionReport check_gauss_parity(const GaussCode& code) { return check_gauss_parity(code.symbols()); }

/// diag(M^2) = 0, M^2 vanishes on non-edges, and every interleaved triple has
/// odd parity sum. Necessary, not sufficient.
CriterionReport check_gl123(const InterlacementGraph& g);

/// One equation per pair i <= j in row-major order:
///   edge (i, j):      X_i + X_j = <m_i, m_j> + 1
///   non-edge (i < j): 0 = <m_i, m_j>
///   diagonal (i, i):  0 = deg(i) mod 2
Gf2System realizability_system(const InterlacementGraph& g);
/// The vertex pair behind each equation of realizability_system, same order.
std::vector<Edge> realizability_system_pairs(int vertex_count);

CriterionReport check_stz_linear(const InterlacementGraph& g);
/// Verdict of check_stz_linear without building a witness.
bool stz_system_consistent(const InterlacementGraph& g);

/// True iff the weights along the closed walk sum to its length mod 2.
bool cycle_condition_holds(const WeightedInterlacementGraph& w, std::span<const int> cycle);

/// Evenness plus the cycle condition on a fundamental cycle basis.
CriterionReport check_cycle_weight(const WeightedInterlacementGraph& w);

struct DehnResult {
  /// Final word, in the input's labels.
  std::vector<Symbol> word;
  std::vector<std::vector<Symbol>> trace;

  GaussCode code() const { return GaussCode::from_word(word); }
};

/// For s = 0..n-1 in turn, reverses the subword between (inclusive) the two
/// current occurrences of s.
DehnResult dehn_transform(std::span<const Symbol> word);
inline DehnResult dehn_transform(const GaussCode& code) { return dehn_transform(code.symbols()); }

CriterionReport check_dehn(std::span<const Symbol> word);
inline CriterionReport check_dehn(const GaussCode& code) { return check_dehn(code.symbols()); }
CriterionReport check_touch(std::span<const Symbol> word);
inline CriterionReport check_touch(const GaussCode& code) { return check_touch(code.symbols()); }

/// The interlacement graph with every odd-weight edge (v_i, v_j) replaced by
/// a path v_i - u_ij - v_j. Subdivision vertex k is numbered
/// original_count + k and sits on subdivided[k].
struct ModifiedGraph {
  int original_count = 0;
  std::vector<Edge> subdivided;
  std::vector<Edge> edges;

  int vertex_count() const { return original_count + static_cast<int>(subdivided.size()); }
};

ModifiedGraph build_modified_graph(const WeightedInterlacementGraph& w);

CriterionReport check_main_theorem(const InterlacementGraph& g);
CriterionReport check_main_theorem(std::span<const Symbol> word);
inline CriterionReport check_main_theorem(const GaussCode& code) { return check_main_theorem(code.symbols()); }

/// 2^n search; throws DimensionTooLarge above kMaxBruteforceDimension.
CriterionReport check_stz_bruteforce(const InterlacementGraph& g);

class CriteriaDisagree : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every criterion, in enum order. StzBruteforce is included while
/// n <= kMaxBruteforceDimension. Throws CriteriaDisagree if the exact criteria
/// do not all agree.
std::vector<CriterionReport> check_all(std::span<const Symbol> word);
inline std::vector<CriterionReport> check_all(const GaussCode& code) { return check_all(code.symbols()); }

}  // namespace gauss
