#pragma once

// Slow, independent reference implementations used to cross-check the library.
// Nothing here calls into gauss:: beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Matrix = std::vector<std::vector<int>>;

inline Word relabel(const Word& w) {
  std::vector<int> map(w.size(), -1);
  int next = 0;
  Word out;
  for (int s : w) {
    if (map[s] < 0) map[s] = next++;
    out.push_back(map[s]);
  }
  return out;
}

// Least relabeled word over every rotation of the word and of its reverse.
inline Word class_key(const Word& w) {
  const int len = static_cast<int>(w.size());
  Word best;
  for (int flip = 0; flip < 2; ++flip) {
    Word base = w;
    if (flip) std::reverse(base.begin(), base.end());
    for (int r = 0; r < len; ++r) {
      Word rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      Word cand = relabel(rot);
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

// Every perfect matching of 2n points written as a word, by recursion on the
// lowest unmatched point.
inline void all_matchings(int n, std::vector<Word>& out) {
  Word w(2 * n, -1);
  auto rec = [&](auto&& self, int label) -> void {
    if (label == n) {
      out.push_back(w);
      return;
    }
    int i = 0;
    while (w[i] >= 0) ++i;
    w[i] = label;
    for (int j = i + 1; j < 2 * n; ++j) {
      if (w[j] >= 0) continue;
      w[j] = label;
      self(self, label + 1);
      w[j] = -1;
    }
    w[i] = -1;
  };
  rec(rec, 0);
}

inline std::set<Word> all_class_keys(int n) {
  std::vector<Word> words;
  all_matchings(n, words);
  std::set<Word> keys;
  for (const auto& w : words) keys.insert(class_key(w));
  return keys;
}

inline std::vector<std::pair<int, int>> chord_ends(const Word& w) {
  const int n = static_cast<int>(w.size()) / 2;
  std::vector<std::pair<int, int>> ends(n, {-1, -1});
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    if (ends[w[p]].first < 0) {
      ends[w[p]].first = p;
    } else {
      ends[w[p]].second = p;
    }
  }
  return ends;
}

// a < c < b < d or c < a < d < b.
inline Matrix interlacement(const Word& w) {
  const auto ends = chord_ends(w);
  const int n = static_cast<int>(ends.size());
  Matrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [a, b] = ends[i];
      const auto [c, d] = ends[j];
      m[i][j] = (a < c && c < b && b < d) || (c < a && a < d && d < b);
    }
  }
  return m;
}

inline Matrix product_mod2(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s % 2;
    }
  return c;
}

inline std::vector<int> neighbor_set(const Matrix& m, int v) {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(m.size()); ++u)
    if (m[v][u]) out.push_back(u);
  return out;
}

inline int common_neighbors(const Matrix& m, int i, int j) {
  const auto a = neighbor_set(m, i);
  const auto b = neighbor_set(m, j);
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return static_cast<int>(both.size());
}

// Some K with M + D_K idempotent, by trying every subset.
inline std::optional<std::uint32_t> idempotent_diagonal(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Matrix a = m;
    for (int i = 0; i < n; ++i) a[i][i] = (mask >> i) & 1U;
    if (product_mod2(a, a) == a) return mask;
  }
  return std::nullopt;
}

struct Equation {
  std::vector<int> vars;
  int rhs = 0;
};

// Every satisfying assignment of an equation list over n <= 20 variables.
inline std::vector<std::uint32_t> all_solutions(int nvars, const std::vector<Equation>& eqs) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << nvars); ++x) {
    bool ok = true;
    for (const auto& e : eqs) {
      int s = 0;
      for (int v : e.vars) s ^= (x >> v) & 1U;
      if (s != e.rhs) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

inline Word random_word(int n, std::mt19937& rng) {
  Word w;
  for (int s = 0; s < n; ++s) {
    w.push_back(s);
    w.push_back(s);
  }
  std::shuffle(w.begin(), w.end(), rng);
  return relabel(w);
}

inline Word rotate_reflect(const Word& w, int rotation, bool reflect) {
  const int len = static_cast<int>(w.size());
  Word out(len);
  for (int p = 0; p < len; ++p) {
    int q = (p + rotation) % len;
    if (reflect) q = len - 1 - q;
    out[q] = w[p];
  }
  return out;
}

}  // namespace oracle
