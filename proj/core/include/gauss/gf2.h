#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gauss {

/// Fixed-size vector over GF(2), packed 64 bits per word.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  BitVector() = default;
  explicit BitVector(int size);
  static BitVector from_bits(std::initializer_list<int> bits);

  int size() const { return size_; }
  bool test(int i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(int i, bool value = true);
  void flip(int i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void reset();

  bool any() const;
  int count() const;
  /// Index of the lowest set bit, or -1.
  int find_first() const;
  /// Parity of the number of positions set in both vectors.
  bool dot(const BitVector& other) const;
  std::vector<int> ones() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// "0110..." with index 0 first.
  std::string to_string() const;

 private:
  int size_ = 0;
  std::vector<Word> words_;
};

/// Dense square matrix over GF(2). Rows are packed bit rows stored contiguously;
/// matrices up to 64x64 occupy one word per row and take the single-word paths.
class Gf2Matrix {
 public:
  using Word = BitVector::Word;

  Gf2Matrix() = default;
  explicit Gf2Matrix(int n);
  static Gf2Matrix identity(int n);
  /// Builds from 0/1 rows; throws std::invalid_argument unless the rows form a square.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Diagonal matrix with ones exactly at the listed indices.
  static Gf2Matrix diagonal(int n, std::span<const int> support);

  int size() const { return n_; }
  int words_per_row() const { return stride_; }

  bool get(int i, int j) const {
    return (bits_[i * stride_ + j / BitVector::kWordBits] >> (j % BitVector::kWordBits)) & 1U;
  }
  void set(int i, int j, bool value = true);
  void flip(int i, int j);

  std::span<const Word> row(int i) const { return {bits_.data() + i * stride_, static_cast<std::size_t>(stride_)}; }
  std::span<Word> row(int i) { return {bits_.data() + i * stride_, static_cast<std::size_t>(stride_)}; }
  BitVector row_vector(int i) const;
  BitVector diagonal_vector() const;

  bool is_symmetric() const;
  bool is_zero() const;

  Gf2Matrix& operator+=(const Gf2Matrix& other);
  friend Gf2Matrix operator+(Gf2Matrix a, const Gf2Matrix& b) { return a += b; }
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  /// One line per row, entries separated by single spaces.
  std::string to_string() const;

 private:
  int n_ = 0;
  int stride_ = 0;
  std::vector<Word> bits_;
};

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix square(const Gf2Matrix& m);
bool is_idempotent(const Gf2Matrix& m);

/// sum_j support_j * X_j = rhs
struct Gf2Equation {
  BitVector support;
  bool rhs = false;

  bool is_constant() const { return !support.any(); }
  friend bool operator==(const Gf2Equation&, const Gf2Equation&) = default;
};

/// "X1 + X3 = 1" with 1-based variable names; constant equations print as "0 = 1".
std::string format_equation(const Gf2Equation& eq);

class Gf2System {
 public:
  explicit Gf2System(int variable_count = 0) : nvars_(variable_count) {}

  int variable_count() const { return nvars_; }
  std::size_t size() const { return equations_.size(); }
  const std::vector<Gf2Equation>& equations() const { return equations_; }
  const Gf2Equation& operator[](std::size_t i) const { return equations_[i]; }

  /// Variables listed twice cancel. Throws std::out_of_range on a bad index.
  void add(std::span<const int> variables, bool rhs);
  void add(std::initializer_list<int> variables, bool rhs) { add(std::span<const int>(variables.begin(), variables.size()), rhs); }
  void add(Gf2Equation eq);

  bool satisfied_by(const BitVector& assignment) const;
  /// Subsystem made of the listed equations, in the listed order.
  Gf2System subsystem(std::span<const int> indices) const;

 private:
  int nvars_ = 0;
  std::vector<Gf2Equation> equations_;
};

struct Gf2Solution {
  bool consistent = false;
  /// Free variables set to zero.
  std::optional<BitVector> particular;
  /// Ascending; one null-space basis vector per entry, in the same order.
  std::vector<int> free_vars;
  std::vector<BitVector> null_basis;
  int rank = 0;
  /// When inconsistent: indices of equations whose sum is 0 = 1.
  std::vector<int> conflict;
};

/// "X1 = c, X2 = 1 + c, ..." for a consistent solution; parameters are named
/// c when there is one free variable, c1, c2, ... otherwise.
std::string format_solution_family(const BitVector& particular, const std::vector<BitVector>& null_basis);

/// Gauss-Jordan elimination, rows in input order, lowest-index pivot first.
Gf2Solution solve(const Gf2System& system);

/// Shrinks an inconsistent subset to an irreducible one (every proper subset
/// is consistent) by trying to drop each equation in order.
std::vector<int> minimize_conflict(const Gf2System& system, std::vector<int> conflict);

class DimensionTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kMaxBruteforceDimension = 24;

/// Searches all diagonal sets K for which M + D_K is idempotent; returns the
/// first K in increasing bitmask order. Test oracle only: 2^n work.
std::optional<std::vector<int>> stz_bruteforce(const Gf2Matrix& m);

}  // namespace gauss
