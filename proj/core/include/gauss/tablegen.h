#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gauss/code.h"
#include "gauss/enumerate.h"

namespace gauss {

inline constexpr int kMaxTableChords = 12;
/// Sizes from here on take minutes to hours and need an explicit opt-in in the CLI.
inline constexpr int kLongTableChords = 11;

/// Class counts for one diagram size.
struct CountRow {
  int n = 0;
  std::uint64_t stz_count = 0;
  std::uint64_t gl123_count = 0;
  /// Classes passing GL123 but failing STZ; always complete.
  std::uint64_t gap_count = 0;
  /// Sorted canonical codes of the gap set, truncated to TableOptions::gap_limit.
  std::vector<GaussCode> gap_examples;
};

struct TableOptions {
  bool collect_gap = false;
  std::size_t gap_limit = 64;
  /// Count only classes with a connected interlacement graph (prime
  /// diagrams). This is the population the published counts refer to.
  bool connected_only = true;
  unsigned jobs = default_jobs();
};

/// Both degrees and non-adjacent common-neighbor counts even, computed straight
/// from a labeled word (labels 0..n-1, n <= kMaxEnumerationChords).
bool word_satisfies_evenness(std::span<const Symbol> word);

CountRow count_row(int n, const TableOptions& options = {});
/// Throws std::out_of_range unless 1 <= n_min <= n_max <= kMaxTableChords.
std::vector<CountRow> count_table(int n_min, int n_max, const TableOptions& options = {});

/// Every class passing GL123 and failing STZ, sorted.
std::vector<GaussCode> gap_diagrams(int n, const TableOptions& options = {});

/// Aligned text: one header line, then one line per row.
std::string format_table(const std::vector<CountRow>& rows);
/// [{"n":..,"stz":..,"gl123":..,"gap_count":..,"gap":["code",..]}, ...]
nlohmann::json table_to_json(const std::vector<CountRow>& rows);

}  // namespace gauss
