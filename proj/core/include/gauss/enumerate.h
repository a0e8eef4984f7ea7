#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "gauss/code.h"

namespace gauss {

inline constexpr int kMaxEnumerationChords = 16;

struct EnumerationOptions {
  /// Runs on every generated word (first-occurrence labeled) before the
  /// class-representative test; returning false drops the word.
  std::function<bool(std::span<const Symbol>)> prefilter;
  /// Generate only words where both occurrences of each symbol are separated
  /// by an even number of positions. Sound whenever the prefilter implies it.
  bool gauss_parity_only = false;
};

/// Fixed partner positions for the first chords (labels 0, 1, ...). Units
/// from split_work partition the search space.
struct WorkUnit {
  std::vector<int> partners;
};

std::vector<WorkUnit> split_work(int n, const EnumerationOptions& options, int depth = 3);

using ClassVisitor = std::function<void(const GaussCode&)>;

/// Visits each class representative reachable from the unit, in generation
/// order (ascending partner positions). Returns the number visited.
std::size_t enumerate_unit(int n, const WorkUnit& unit, const EnumerationOptions& options, const ClassVisitor& visit);

/// One representative (its EquivClassKey code) per dihedral class of chord
/// diagrams with n chords, in generation order. Serial and deterministic.
std::size_t enumerate_canonical(int n, const ClassVisitor& visit, const EnumerationOptions& options = {});

unsigned default_jobs();

/// Parallel map-reduce over enumerate_canonical. Each work unit folds into its
/// own accumulator with visit(acc, code); accumulators are merged in unit
/// order, so the result does not depend on `jobs`.
template <class Acc, class Visit, class Merge>
Acc enumerate_canonical_reduce(int n, const EnumerationOptions& options, unsigned jobs, Visit visit, Merge merge) {
  const std::vector<WorkUnit> units = split_work(n, options);
  std::vector<Acc> partial(units.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t u = next++; u < units.size(); u = next++) {
      try {
        enumerate_unit(n, units[u], options, [&](const GaussCode& code) { visit(partial[u], code); });
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = units.size();
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(units.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  Acc total{};
  for (Acc& p : partial) merge(total, std::move(p));
  return total;
}

}  // namespace gauss
