#include "gauss/enumerate.h"

#include <array>
#include <stdexcept>
#include <string>

namespace gauss {
namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxEnumerationChords) {
    throw std::out_of_range("enumeration supports 0 <= n <= " + std::to_string(kMaxEnumerationChords));
  }
}

class Generator {
 public:
  Generator(int n, const EnumerationOptions& options, const ClassVisitor& visit)
      : n_(n), len_(2 * n), options_(options), visit_(visit) {
    word_.fill(-1);
  }

  // Places the fixed prefix; false if it is not a valid partial matching.
  bool place_prefix(const WorkUnit& unit) {
    for (int label = 0; label < static_cast<int>(unit.partners.size()); ++label) {
      const int i = first_free(0);
      const int j = unit.partners[label];
      if (i < 0 || j <= i || j >= len_ || word_[j] >= 0) return false;
      if (options_.gauss_parity_only && (j - i) % 2 == 0) return false;
      word_[i] = word_[j] = label;
    }
    return true;
  }

  void run(int label) {
    if (label == n_) {
      leaf();
      return;
    }
    const int i = first_free(0);
    const int step = options_.gauss_parity_only ? 2 : 1;
    for (int j = i + 1; j < len_; j += step) {
      if (word_[j] >= 0) continue;
      word_[i] = word_[j] = label;
      run(label + 1);
      word_[i] = word_[j] = -1;
    }
  }

  std::size_t visited() const { return visited_; }

 private:
  int first_free(int from) const {
    for (int i = from; i < len_; ++i) {
      if (word_[i] < 0) return i;
    }
    return -1;
  }

  void leaf() {
    const std::span<const Symbol> w(word_.data(), len_);
    if (options_.prefilter && !options_.prefilter(w)) return;
    if (!is_class_representative(w)) return;
    ++visited_;
    if (visit_) visit_(GaussCode::from_word(w));
  }

  int n_;
  int len_;
  const EnumerationOptions& options_;
  const ClassVisitor& visit_;
  std::array<Symbol, 2 * kMaxEnumerationChords> word_;
  std::size_t visited_ = 0;
};

void collect_prefixes(int n, int depth, bool parity, std::vector<int>& partners, std::vector<bool>& used,
                      std::vector<WorkUnit>& out) {
  if (static_cast<int>(partners.size()) == depth) {
    out.push_back(WorkUnit{partners});
    return;
  }
  int i = 0;
  while (used[i]) ++i;
  for (int j = i + 1; j < 2 * n; ++j) {
    if (used[j] || (parity && (j - i) % 2 == 0)) continue;
    used[i] = used[j] = true;
    partners.push_back(j);
    collect_prefixes(n, depth, parity, partners, used, out);
    partners.pop_back();
    used[i] = used[j] = false;
  }
}

}  // namespace

std::vector<WorkUnit> split_work(int n, const EnumerationOptions& options, int depth) {
  check_size(n);
  std::vector<WorkUnit> units;
  std::vector<int> partners;
  std::vector<bool> used(2 * n, false);
  collect_prefixes(n, std::clamp(depth, 0, n), options.gauss_parity_only, partners, used, units);
  return units;
}

std::size_t enumerate_unit(int n, const WorkUnit& unit, const EnumerationOptions& options, const ClassVisitor& visit) {
  check_size(n);
  Generator gen(n, options, visit);
  if (!gen.place_prefix(unit)) return 0;
  gen.run(static_cast<int>(unit.partners.size()));
  return gen.visited();
}

std::size_t enumerate_canonical(int n, const ClassVisitor& visit, const EnumerationOptions& options) {
  return enumerate_unit(n, WorkUnit{}, options, visit);
}

unsigned default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace gauss
