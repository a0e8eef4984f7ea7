#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace gauss {

using Symbol = int;

enum class CodeErrorKind { EmptyInput, OddLength, NotDoubleOccurrence };

class CodeError : public std::invalid_argument {
 public:
  CodeError(CodeErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  CodeErrorKind kind() const { return kind_; }

 private:
  CodeErrorKind kind_;
};

/// A double-occurrence word over 0..n-1, relabeled so that first occurrences
/// appear in increasing order. The empty word (n = 0) is the simple loop.
class GaussCode {
 public:
  GaussCode() = default;

  /// Relabels to first-occurrence order. Throws CodeError unless every symbol
  /// occurs exactly twice.
  static GaussCode from_word(std::span<const Symbol> word);
  static GaussCode from_word(std::initializer_list<Symbol> word) {
    return from_word(std::span<const Symbol>(word.begin(), word.size()));
  }

  int chord_count() const { return static_cast<int>(symbols_.size() / 2); }
  int length() const { return static_cast<int>(symbols_.size()); }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol operator[](int i) const { return symbols_[i]; }

  /// Positions (p < q) of both occurrences of symbol s.
  std::pair<int, int> occurrences(Symbol s) const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
  friend auto operator<=>(const GaussCode& a, const GaussCode& b) { return a.symbols_ <=> b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
};

/// Parses whitespace/comma separated tokens, or a contiguous run of one-character
/// symbols. Token names are discarded after relabeling.
GaussCode parse_code(std::string_view text);

/// Same grammar as parse_code, but keeps numeric labels: tokens that are exactly
/// the integers 1..n become symbols 0..n-1, tokens 0..n-1 stay as they are.
/// Any other token set is numbered in first-occurrence order.
std::vector<Symbol> parse_word(std::string_view text);

/// 1-based rendering of a labeled word, formatted like format_code.
std::string format_word(std::span<const Symbol> word);

/// Inverse of parse_code: 1-based digits ("12334124") while n <= 9, otherwise
/// space-separated 1-based numbers.
std::string format_code(const GaussCode& code);

/// Endpoints (p < q) of every chord on 2n circle positions.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  /// Throws std::invalid_argument unless the endpoints form a perfect matching of [0, 2n).
  explicit ChordDiagram(std::vector<std::pair<int, int>> endpoints);

  static ChordDiagram from_code(const GaussCode& code);
  /// Keeps the word's own labels: chord c joins the two positions holding c.
  /// Throws CodeError unless the word uses each of 0..n-1 exactly twice.
  static ChordDiagram from_word(std::span<const Symbol> word);

  int chord_count() const { return static_cast<int>(endpoints_.size()); }
  int point_count() const { return 2 * chord_count(); }
  std::pair<int, int> chord(int c) const { return endpoints_[c]; }
  std::span<const std::pair<int, int>> chords() const { return endpoints_; }

  /// Chord index sitting at each circle position.
  std::vector<Symbol> word() const;
  GaussCode to_code() const { return GaussCode::from_word(word()); }

  /// Chords renumbered in first-occurrence order.
  ChordDiagram canonicalized() const { return from_code(to_code()); }

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  std::vector<std::pair<int, int>> endpoints_;
};

inline ChordDiagram to_diagram(const GaussCode& code) { return ChordDiagram::from_code(code); }

/// Dihedral element: position p goes to (p + rotation) mod 2n, then to 2n-1-p
/// when reflected. Chord indices are kept, so the result is not canonical.
ChordDiagram apply_symmetry(const ChordDiagram& d, int rotation, bool reflect);
GaussCode apply_symmetry(const GaussCode& code, int rotation, bool reflect);

/// Lexicographically least canonical code among the 4n dihedral images.
class EquivClassKey {
 public:
  EquivClassKey() = default;
  explicit EquivClassKey(GaussCode representative) : code_(std::move(representative)) {}

  const GaussCode& code() const { return code_; }

  friend bool operator==(const EquivClassKey&, const EquivClassKey&) = default;
  friend auto operator<=>(const EquivClassKey&, const EquivClassKey&) = default;

 private:
  GaussCode code_;
};

EquivClassKey canonical_key(const GaussCode& code);
inline EquivClassKey canonical_key(const ChordDiagram& d) { return canonical_key(d.to_code()); }

/// True iff the word (already in first-occurrence labeling) equals its own
/// class key. Exits early on the first dihedral image that compares smaller.
bool is_class_representative(std::span<const Symbol> word);

// {"n": int, "code": [int, ...]}
void to_json(nlohmann::json& j, const GaussCode& code);
void from_json(const nlohmann::json& j, GaussCode& code);

}  // namespace gauss
