#include "gauss/tablegen.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gauss/criteria.h"
#include "gauss/interlace.h"

namespace gauss {

bool word_satisfies_evenness(std::span<const Symbol> word) {
  const int len = static_cast<int>(word.size());
  const int n = len / 2;
  std::array<int, kMaxEnumerationChords> first;
  first.fill(-1);
  std::array<std::uint32_t, kMaxEnumerationChords> rows{};
  // Running XOR of one-hot symbols: a chord's row is the set of symbols seen
  // an odd number of times strictly between its endpoints.
  std::array<std::uint32_t, 2 * kMaxEnumerationChords + 1> prefix{};
  for (int i = 0; i < len; ++i) prefix[i + 1] = prefix[i] ^ (std::uint32_t{1} << word[i]);
  for (int i = 0; i < len; ++i) {
    const Symbol s = word[i];
    if (first[s] < 0) {
      first[s] = i;
      continue;
    }
    rows[s] = prefix[i] ^ prefix[first[s] + 1];
    if (std::popcount(rows[s]) % 2 != 0) return false;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((rows[a] >> b) & 1U) continue;
      if (std::popcount(rows[a] & rows[b]) % 2 != 0) return false;
    }
  }
  return true;
}

namespace {

struct RowAccumulator {
  std::uint64_t stz = 0;
  std::uint64_t gl123 = 0;
  std::vector<GaussCode> gap;
  std::uint64_t gap_count = 0;
};

}  // namespace

CountRow count_row(int n, const TableOptions& options) {
  if (n < 1 || n > kMaxTableChords) throw std::out_of_range("table sizes must lie in [1, 12]");

  EnumerationOptions enumeration;
  enumeration.gauss_parity_only = true;
  enumeration.prefilter = word_satisfies_evenness;

  const bool collect = options.collect_gap;
  const bool connected_only = options.connected_only;
  auto visit = [collect, connected_only](RowAccumulator& acc, const GaussCode& code) {
    const auto g = InterlacementGraph::from_code(code);
    if (connected_only && !g.is_connected()) return;
    const bool gl = check_gl123(g).verdict;
    const bool stz = stz_system_consistent(g);
    acc.gl123 += gl;
    acc.stz += stz;
    if (gl && !stz) {
      ++acc.gap_count;
      if (collect) acc.gap.push_back(code);
    }
  };
  auto merge = [](RowAccumulator& total, RowAccumulator&& part) {
    total.stz += part.stz;
    total.gl123 += part.gl123;
    total.gap_count += part.gap_count;
    total.gap.insert(total.gap.end(), std::make_move_iterator(part.gap.begin()), std::make_move_iterator(part.gap.end()));
  };

  RowAccumulator acc = enumerate_canonical_reduce<RowAccumulator>(n, enumeration, options.jobs, visit, merge);

  CountRow row;
  row.n = n;
  row.stz_count = acc.stz;
  row.gl123_count = acc.gl123;
  row.gap_count = acc.gap_count;
  std::sort(acc.gap.begin(), acc.gap.end());
  if (acc.gap.size() > options.gap_limit) acc.gap.resize(options.gap_limit);
  row.gap_examples = std::move(acc.gap);
  return row;
}

std::vector<CountRow> count_table(int n_min, int n_max, const TableOptions& options) {
  if (n_min < 1 || n_max > kMaxTableChords || n_min > n_max) {
    throw std::out_of_range("table bounds must satisfy 1 <= from <= to <= 12");
  }
  std::vector<CountRow> rows;
  for (int n = n_min; n <= n_max; ++n) rows.push_back(count_row(n, options));
  return rows;
}

std::vector<GaussCode> gap_diagrams(int n, const TableOptions& options) {
  TableOptions all = options;
  all.collect_gap = true;
  all.gap_limit = static_cast<std::size_t>(-1);
  return count_row(n, all).gap_examples;
}

std::string format_table(const std::vector<CountRow>& rows) {
  std::string out;
  char line[96];
  std::snprintf(line, sizeof line, "%4s %12s %12s %8s\n", "n", "stz", "gl123", "gap");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%4d %12llu %12llu %8llu\n", r.n, static_cast<unsigned long long>(r.stz_count),
                  static_cast<unsigned long long>(r.gl123_count), static_cast<unsigned long long>(r.gap_count));
    out += line;
  }
  return out;
}

nlohmann::json table_to_json(const std::vector<CountRow>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows) {
    auto gap = nlohmann::json::array();
    for (const auto& code : r.gap_examples) gap.push_back(format_code(code));
    out.push_back({{"n", r.n}, {"stz", r.stz_count}, {"gl123", r.gl123_count}, {"gap_count", r.gap_count}, {"gap", gap}});
  }
  return out;
}

}  // namespace gauss
