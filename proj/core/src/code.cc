#include "gauss/code.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace gauss {
namespace {

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ';'; }

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  const bool separated = std::any_of(text.begin(), text.end(), is_separator);
  if (!separated) {
    for (std::size_t i = 0; i < text.size(); ++i) tokens.push_back(text.substr(i, 1));
    return tokens;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Reads the word from `start` in direction `step` (cyclically) and relabels it
// into first-occurrence order. Symbols must be < Capacity.
template <std::size_t Capacity>
void relabel_image(std::span<const Symbol> word, int start, int step, std::vector<Symbol>& relabeled) {
  const int len = static_cast<int>(word.size());
  std::array<Symbol, Capacity> map;
  map.fill(-1);
  Symbol next = 0;
  relabeled.resize(len);
  for (int i = 0; i < len; ++i) {
    const Symbol s = word[((start + step * i) % len + len) % len];
    if (map[s] < 0) map[s] = next++;
    relabeled[i] = map[s];
  }
}

void relabel_image_any(std::span<const Symbol> word, int start, int step, std::vector<Symbol>& relabeled) {
  if (word.size() <= 128) {
    relabel_image<64>(word, start, step, relabeled);
    return;
  }
  const int len = static_cast<int>(word.size());
  std::vector<Symbol> map(len / 2, -1);
  Symbol next = 0;
  relabeled.resize(len);
  for (int i = 0; i < len; ++i) {
    const Symbol s = word[((start + step * i) % len + len) % len];
    if (map[s] < 0) map[s] = next++;
    relabeled[i] = map[s];
  }
}

// -1 / 0 / +1 comparing the relabeled image (start, step) against `word`.
template <typename Map>
int compare_image(std::span<const Symbol> word, int start, int step, Map& map) {
  const int len = static_cast<int>(word.size());
  std::fill(map.begin(), map.end(), -1);
  Symbol next = 0;
  int pos = start;
  for (int i = 0; i < len; ++i) {
    const Symbol s = word[pos];
    pos += step;
    if (pos == len) pos = 0;
    if (pos < 0) pos = len - 1;
    if (map[s] < 0) map[s] = next++;
    if (map[s] != word[i]) return map[s] < word[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

GaussCode GaussCode::from_word(std::span<const Symbol> word) {
  std::unordered_map<Symbol, Symbol> label;
  std::vector<int> count;
  GaussCode code;
  code.symbols_.reserve(word.size());
  for (Symbol s : word) {
    auto [it, inserted] = label.try_emplace(s, static_cast<Symbol>(label.size()));
    if (inserted) count.push_back(0);
    ++count[it->second];
    code.symbols_.push_back(it->second);
  }
  for (std::size_t i = 0; i < count.size(); ++i) {
    if (count[i] != 2) {
      throw CodeError(CodeErrorKind::NotDoubleOccurrence,
                      "symbol #" + std::to_string(i + 1) + " occurs " + std::to_string(count[i]) + " times");
    }
  }
  return code;
}

std::pair<int, int> GaussCode::occurrences(Symbol s) const {
  int first = -1;
  for (int i = 0; i < length(); ++i) {
    if (symbols_[i] != s) continue;
    if (first < 0) {
      first = i;
    } else {
      return {first, i};
    }
  }
  throw std::out_of_range("symbol not in code");
}

std::vector<Symbol> parse_word(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw CodeError(CodeErrorKind::EmptyInput, "empty Gauss code");

  std::map<std::string_view, int> count;
  std::vector<std::string_view> order;
  for (auto t : tokens) {
    if (count[t]++ == 0) order.push_back(t);
  }
  for (auto t : order) {
    if (count[t] != 2) {
      throw CodeError(CodeErrorKind::NotDoubleOccurrence,
                      "symbol '" + std::string(t) + "' occurs " + std::to_string(count[t]) + " times");
    }
  }
  // Unreachable once every token occurs twice; kept so the error kind stays meaningful.
  if (tokens.size() % 2 != 0) throw CodeError(CodeErrorKind::OddLength, "odd-length Gauss code");

  const int n = static_cast<int>(order.size());
  std::vector<bool> seen(n + 1, false);
  int distinct = 0;
  int lo = n;
  for (auto t : order) {
    int v = -1;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || v < 0 || v > n || seen[v]) break;
    seen[v] = true;
    lo = std::min(lo, v);
    ++distinct;
  }
  if (distinct == n) {
    // n distinct values in [0, n] miss exactly one; labels are kept when that is n or 0.
    const bool contiguous = lo == 0 ? !seen[n] : !seen[0];
    if (contiguous) {
      std::vector<Symbol> word;
      word.reserve(tokens.size());
      for (auto t : tokens) {
        int v = 0;
        std::from_chars(t.data(), t.data() + t.size(), v);
        word.push_back(v - lo);
      }
      return word;
    }
  }

  std::map<std::string_view, Symbol> id;
  std::vector<Symbol> word;
  word.reserve(tokens.size());
  for (auto t : tokens) {
    auto [it, inserted] = id.try_emplace(t, static_cast<Symbol>(id.size()));
    word.push_back(it->second);
  }
  return word;
}

GaussCode parse_code(std::string_view text) { return GaussCode::from_word(parse_word(text)); }

std::string format_word(std::span<const Symbol> word) {
  std::string s;
  const bool digits = word.size() <= 18;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!digits && i > 0) s += ' ';
    s += std::to_string(word[i] + 1);
  }
  return s;
}

std::string format_code(const GaussCode& code) { return format_word(code.symbols()); }

ChordDiagram::ChordDiagram(std::vector<std::pair<int, int>> endpoints) : endpoints_(std::move(endpoints)) {
  const int points = 2 * static_cast<int>(endpoints_.size());
  std::vector<bool> used(points, false);
  for (auto& [p, q] : endpoints_) {
    if (p > q) std::swap(p, q);
    if (p == q || p < 0 || q >= points || used[p] || used[q]) {
      throw std::invalid_argument("chord endpoints do not form a perfect matching");
    }
    used[p] = used[q] = true;
  }
}

ChordDiagram ChordDiagram::from_code(const GaussCode& code) { return from_word(code.symbols()); }

ChordDiagram ChordDiagram::from_word(std::span<const Symbol> word) {
  const int n = static_cast<int>(word.size() / 2);
  std::vector<std::pair<int, int>> endpoints(n, {-1, -1});
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    const Symbol s = word[i];
    if (s < 0 || s >= n || endpoints[s].second >= 0) {
      throw CodeError(CodeErrorKind::NotDoubleOccurrence, "word is not a labeled double-occurrence word");
    }
    auto& e = endpoints[s];
    (e.first < 0 ? e.first : e.second) = i;
  }
  if (word.size() % 2 != 0) throw CodeError(CodeErrorKind::OddLength, "odd-length word");
  return ChordDiagram(std::move(endpoints));
}

std::vector<Symbol> ChordDiagram::word() const {
  std::vector<Symbol> w(point_count());
  for (int c = 0; c < chord_count(); ++c) {
    w[endpoints_[c].first] = c;
    w[endpoints_[c].second] = c;
  }
  return w;
}

ChordDiagram apply_symmetry(const ChordDiagram& d, int rotation, bool reflect) {
  const int len = d.point_count();
  if (len == 0) return d;
  const int rot = ((rotation % len) + len) % len;
  auto move = [&](int p) {
    int q = (p + rot) % len;
    return reflect ? len - 1 - q : q;
  };
  std::vector<std::pair<int, int>> endpoints;
  endpoints.reserve(d.chord_count());
  for (auto [p, q] : d.chords()) endpoints.emplace_back(move(p), move(q));
  return ChordDiagram(std::move(endpoints));
}

GaussCode apply_symmetry(const GaussCode& code, int rotation, bool reflect) {
  return apply_symmetry(ChordDiagram::from_code(code), rotation, reflect).to_code();
}

EquivClassKey canonical_key(const GaussCode& code) {
  const auto word = code.symbols();
  const int len = code.length();
  std::vector<Symbol> best(word.begin(), word.end());
  std::vector<Symbol> image;
  for (int start = 0; start < len; ++start) {
    for (int step : {1, -1}) {
      relabel_image_any(word, start, step, image);
      if (image < best) best.swap(image);
    }
  }
  return EquivClassKey(GaussCode::from_word(best));
}

bool is_class_representative(std::span<const Symbol> word) {
  const int len = static_cast<int>(word.size());
  auto check = [&](auto& map) {
    for (int start = 0; start < len; ++start) {
      if (start > 0 && compare_image(word, start, 1, map) < 0) return false;
      if (compare_image(word, start, -1, map) < 0) return false;
    }
    return true;
  };
  if (len <= 128) {
    std::array<Symbol, 64> map;
    return check(map);
  }
  std::vector<Symbol> map(len / 2);
  return check(map);
}

void to_json(nlohmann::json& j, const GaussCode& code) {
  j = nlohmann::json{{"n", code.chord_count()},
                     {"code", std::vector<Symbol>(code.symbols().begin(), code.symbols().end())}};
}

void from_json(const nlohmann::json& j, GaussCode& code) {
  const int n = j.at("n").get<int>();
  const auto word = j.at("code").get<std::vector<Symbol>>();
  if (n < 0 || static_cast<int>(word.size()) != 2 * n) {
    throw CodeError(CodeErrorKind::OddLength, "code length is not 2n");
  }
  code = GaussCode::from_word(word);
}

}  // namespace gauss
