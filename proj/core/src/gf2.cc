#include "gauss/gf2.h"

#include <algorithm>
#include <bit>

namespace gauss {
namespace {

constexpr int words_for(int bits) { return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits; }

}  // namespace

BitVector::BitVector(int size) : size_(size), words_(words_for(size), 0) {
  if (size < 0) throw std::invalid_argument("negative bit vector size");
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  BitVector v(static_cast<int>(bits.size()));
  int i = 0;
  for (int b : bits) v.set(i++, b != 0);
  return v;
}

void BitVector::set(int i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::reset() { std::fill(words_.begin(), words_.end(), 0); }

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

int BitVector::count() const {
  int c = 0;
  for (Word w : words_) c += std::popcount(w);
  return c;
}

int BitVector::find_first() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return static_cast<int>(k) * kWordBits + std::countr_zero(words_[k]);
  }
  return -1;
}

bool BitVector::dot(const BitVector& other) const {
  Word acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

std::vector<int> BitVector::ones() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    for (Word w = words_[k]; w != 0; w &= w - 1) {
      out.push_back(static_cast<int>(k) * kWordBits + std::countr_zero(w));
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("bit vector size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("bit vector size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (int i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

Gf2Matrix::Gf2Matrix(int n) : n_(n), stride_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_for(n), 0) {
  if (n < 0) throw std::invalid_argument("negative matrix dimension");
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix rows must form a square");
    for (int j = 0; j < n; ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

Gf2Matrix Gf2Matrix::diagonal(int n, std::span<const int> support) {
  Gf2Matrix m(n);
  for (int k : support) m.set(k, k);
  return m;
}

void Gf2Matrix::set(int i, int j, bool value) {
  Word& w = bits_[i * stride_ + j / BitVector::kWordBits];
  const Word mask = Word{1} << (j % BitVector::kWordBits);
  w = value ? (w | mask) : (w & ~mask);
}

void Gf2Matrix::flip(int i, int j) {
  bits_[i * stride_ + j / BitVector::kWordBits] ^= Word{1} << (j % BitVector::kWordBits);
}

BitVector Gf2Matrix::row_vector(int i) const {
  BitVector v(n_);
  std::copy(row(i).begin(), row(i).end(), v.words().begin());
  return v;
}

BitVector Gf2Matrix::diagonal_vector() const {
  BitVector v(n_);
  for (int i = 0; i < n_; ++i) v.set(i, get(i, i));
  return v;
}

bool Gf2Matrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (get(i, j) != get(j, i)) return false;
    }
  }
  return true;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

Gf2Matrix& Gf2Matrix::operator+=(const Gf2Matrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] ^= other.bits_[k];
  return *this;
}

std::string Gf2Matrix::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j > 0) s += ' ';
      s += get(i, j) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

// Row i of A*B is the XOR of the rows of B selected by row i of A.
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
  const int n = a.size();
  Gf2Matrix out(n);
  if (n <= BitVector::kWordBits) {
    for (int i = 0; i < n; ++i) {
      BitVector::Word acc = 0;
      for (BitVector::Word sel = n ? a.row(i)[0] : 0; sel != 0; sel &= sel - 1) {
        acc ^= b.row(std::countr_zero(sel))[0];
      }
      if (n) out.row(i)[0] = acc;
    }
    return out;
  }
  const int stride = a.words_per_row();
  for (int i = 0; i < n; ++i) {
    auto dst = out.row(i);
    auto sel_row = a.row(i);
    for (int k = 0; k < stride; ++k) {
      for (BitVector::Word sel = sel_row[k]; sel != 0; sel &= sel - 1) {
        auto src = b.row(k * BitVector::kWordBits + std::countr_zero(sel));
        for (int w = 0; w < stride; ++w) dst[w] ^= src[w];
      }
    }
  }
  return out;
}

Gf2Matrix square(const Gf2Matrix& m) { return multiply(m, m); }

bool is_idempotent(const Gf2Matrix& m) { return square(m) == m; }

std::string format_equation(const Gf2Equation& eq) {
  std::string s;
  for (int v : eq.support.ones()) {
    if (!s.empty()) s += " + ";
    s += "X" + std::to_string(v + 1);
  }
  if (s.empty()) s = "0";
  s += eq.rhs ? " = 1" : " = 0";
  return s;
}

std::string format_solution_family(const BitVector& particular, const std::vector<BitVector>& null_basis) {
  std::string s;
  for (int v = 0; v < particular.size(); ++v) {
    if (v > 0) s += ", ";
    s += "X" + std::to_string(v + 1) + " = ";
    std::string terms = particular.test(v) ? "1" : "";
    for (std::size_t k = 0; k < null_basis.size(); ++k) {
      if (!null_basis[k].test(v)) continue;
      if (!terms.empty()) terms += " + ";
      terms += null_basis.size() == 1 ? std::string("c") : "c" + std::to_string(k + 1);
    }
    s += terms.empty() ? "0" : terms;
  }
  return s;
}

void Gf2System::add(std::span<const int> variables, bool rhs) {
  Gf2Equation eq{BitVector(nvars_), rhs};
  for (int v : variables) {
    if (v < 0 || v >= nvars_) throw std::out_of_range("equation variable out of range");
    eq.support.flip(v);
  }
  equations_.push_back(std::move(eq));
}

void Gf2System::add(Gf2Equation eq) {
  if (eq.support.size() != nvars_) throw std::out_of_range("equation width does not match variable count");
  equations_.push_back(std::move(eq));
}

bool Gf2System::satisfied_by(const BitVector& assignment) const {
  return std::all_of(equations_.begin(), equations_.end(),
                     [&](const Gf2Equation& eq) { return eq.support.dot(assignment) == eq.rhs; });
}

Gf2System Gf2System::subsystem(std::span<const int> indices) const {
  Gf2System sub(nvars_);
  for (int i : indices) sub.equations_.push_back(equations_.at(i));
  return sub;
}

namespace {

struct EchelonRow {
  BitVector support;
  bool rhs = false;
  BitVector combination;
};

// Solves the echelon rows (pivot = lowest set bit) for the given free-variable
// values, highest pivot first.
BitVector back_substitute(const std::vector<EchelonRow>& rows, const std::vector<int>& pivot_row, BitVector x,
                          bool homogeneous) {
  for (int v = static_cast<int>(pivot_row.size()) - 1; v >= 0; --v) {
    const int r = pivot_row[v];
    if (r < 0) continue;
    x.set(v, false);
    bool value = homogeneous ? false : rows[r].rhs;
    value ^= rows[r].support.dot(x);
    x.set(v, value);
  }
  return x;
}

}  // namespace

Gf2Solution solve(const Gf2System& system) {
  const int nvars = system.variable_count();
  const int m = static_cast<int>(system.size());

  std::vector<EchelonRow> rows;
  std::vector<int> pivot_row(nvars, -1);
  Gf2Solution result;
  result.consistent = true;

  for (int e = 0; e < m; ++e) {
    EchelonRow row{system[e].support, system[e].rhs, BitVector(m)};
    row.combination.set(e);
    for (int v = row.support.find_first(); v >= 0 && v < nvars;) {
      if (pivot_row[v] < 0) break;
      const EchelonRow& p = rows[pivot_row[v]];
      row.support ^= p.support;
      row.rhs ^= p.rhs;
      row.combination ^= p.combination;
      v = row.support.find_first();
    }
    const int lead = row.support.find_first();
    if (lead < 0) {
      if (row.rhs && result.consistent) {
        result.consistent = false;
        result.conflict = row.combination.ones();
      }
      continue;
    }
    pivot_row[lead] = static_cast<int>(rows.size());
    rows.push_back(std::move(row));
  }

  result.rank = static_cast<int>(rows.size());
  for (int v = 0; v < nvars; ++v) {
    if (pivot_row[v] < 0) result.free_vars.push_back(v);
  }
  if (!result.consistent) return result;

  result.particular = back_substitute(rows, pivot_row, BitVector(nvars), false);
  for (int f : result.free_vars) {
    BitVector seed(nvars);
    seed.set(f);
    result.null_basis.push_back(back_substitute(rows, pivot_row, std::move(seed), true));
  }
  return result;
}

std::vector<int> minimize_conflict(const Gf2System& system, std::vector<int> conflict) {
  const std::vector<int> candidates = conflict;
  for (int drop : candidates) {
    std::vector<int> trial;
    trial.reserve(conflict.size());
    std::copy_if(conflict.begin(), conflict.end(), std::back_inserter(trial), [&](int i) { return i != drop; });
    if (!solve(system.subsystem(trial)).consistent) conflict = std::move(trial);
  }
  return conflict;
}

std::optional<std::vector<int>> stz_bruteforce(const Gf2Matrix& m) {
  const int n = m.size();
  if (n > kMaxBruteforceDimension) {
    throw DimensionTooLarge("stz_bruteforce supports n <= " + std::to_string(kMaxBruteforceDimension));
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Gf2Matrix candidate = m;
    for (int k = 0; k < n; ++k) {
      if ((mask >> k) & 1U) candidate.flip(k, k);
    }
    if (is_idempotent(candidate)) {
      std::vector<int> support;
      for (int k = 0; k < n; ++k) {
        if ((mask >> k) & 1U) support.push_back(k);
      }
      return support;
    }
  }
  return std::nullopt;
}

}  // namespace gauss
