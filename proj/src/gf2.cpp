#include "hilbcode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "hilbcode/error.hpp"

namespace hilbcode {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InvalidInput("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t size) {
  BitVector v(size);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  if (size % 64 != 0) v.words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  if (rows.empty()) throw InvalidInput("matrix must have at least one row");
  const std::size_t cols = rows.front().size();
  if (cols == 0) throw InvalidInput("matrix must have at least one column");
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidInput("matrix rows have unequal lengths");
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_rows(std::span<const std::string> rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  return from_rows(std::move(parsed));
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (auto r : rows) parsed.push_back(BitVector::from_string(r));
  return from_rows(std::move(parsed));
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

void BitMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& r : rows_) {
    const bool va = r.get(a);
    const bool vb = r.get(b);
    if (va != vb) {
      r.flip(a);
      r.flip(b);
    }
  }
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: inner dimensions differ");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out.row(i) = left_multiply(a.row(i), b);
  return out;
}

BitVector left_multiply(const BitVector& x, const BitMatrix& m) {
  if (x.size() != m.rows()) throw InvalidInput("coefficient row length differs from row count");
  BitVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x.get(i)) out ^= m.row(i);
  }
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_permutation(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::uint64_t WeightEnumerator::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<std::pair<std::size_t, std::uint64_t>> WeightEnumerator::nonzero() const {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] != 0) out.emplace_back(w, counts[w]);
  }
  return out;
}

BitMatrix row_echelon_basis(const BitMatrix& m) {
  BitMatrix work = m;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < work.cols() && pivot_row < work.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < work.rows() && !work.get(r, c)) ++r;
    if (r == work.rows()) continue;
    work.swap_rows(pivot_row, r);
    for (std::size_t k = 0; k < work.rows(); ++k) {
      if (k != pivot_row && work.get(k, c)) work.add_row(pivot_row, k);
    }
    ++pivot_row;
  }
  BitMatrix basis(pivot_row, work.cols());
  for (std::size_t r = 0; r < pivot_row; ++r) basis.row(r) = work.row(r);
  return basis;
}

std::size_t rank(const BitMatrix& m) { return row_echelon_basis(m).rows(); }

bool is_self_dual_generator(const BitMatrix& m) {
  if (m.cols() % 2 != 0) {
    throw InvalidInput("self-duality requires an even column count, got " +
                       std::to_string(m.cols()));
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.rows(); ++j) {
      if (m.row(i).dot(m.row(j))) return false;
    }
  }
  return rank(m) == m.cols() / 2;
}

WeightEnumerator weight_enumerator(const BitMatrix& m) {
  const BitMatrix basis = row_echelon_basis(m);
  const std::size_t r = basis.rows();
  if (r > kEnumerationRankGuard) {
    throw GuardExceeded("weight enumeration refused: rank " + std::to_string(r) +
                        " exceeds guard " + std::to_string(kEnumerationRankGuard));
  }
  WeightEnumerator e{std::vector<std::uint64_t>(m.cols() + 1, 0)};
  // Gray-code walk: each step flips exactly one basis row into the accumulator.
  BitVector word(m.cols());
  e.counts[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= basis.row(static_cast<std::size_t>(std::countr_zero(i)));
    ++e.counts[word.weight()];
  }
  return e;
}

std::size_t min_distance(const BitMatrix& m) {
  const auto e = weight_enumerator(m);
  for (std::size_t w = 1; w < e.counts.size(); ++w) {
    if (e.counts[w] != 0) return w;
  }
  throw InvalidInput("minimum distance undefined for the zero code");
}

std::optional<BitVector> solve_left(const BitMatrix& m, const BitVector& target) {
  if (target.size() != m.cols()) throw InvalidInput("target length differs from column count");
  // Eliminate on [M | I] so each reduced row remembers its combination of inputs.
  BitMatrix work = m;
  BitMatrix combo = BitMatrix::identity(m.rows());
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < work.cols() && pivot_row < work.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < work.rows() && !work.get(r, c)) ++r;
    if (r == work.rows()) continue;
    work.swap_rows(pivot_row, r);
    combo.swap_rows(pivot_row, r);
    for (std::size_t k = 0; k < work.rows(); ++k) {
      if (k != pivot_row && work.get(k, c)) {
        work.add_row(pivot_row, k);
        combo.add_row(pivot_row, k);
      }
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  BitVector residual = target;
  BitVector x(m.rows());
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    if (residual.get(pivot_cols[k])) {
      residual ^= work.row(k);
      x ^= combo.row(k);
    }
  }
  if (residual.any()) return std::nullopt;
  return x;
}

bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) {
    throw InvalidInput("row space comparison: column counts " + std::to_string(a.cols()) +
                       " and " + std::to_string(b.cols()) + " differ");
  }
  return row_echelon_basis(a) == row_echelon_basis(b);
}

BitMatrix apply_column_permutation(const BitMatrix& m, std::span<const std::size_t> perm) {
  if (perm.size() != m.cols() || !is_permutation(perm)) {
    throw InvalidInput("column permutation is not a bijection on " + std::to_string(m.cols()) +
                       " columns");
  }
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      if (m.get(r, perm[j])) out.set(r, j);
    }
  }
  return out;
}

BitMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of("01") != std::string::npos) {
      throw InvalidInput("matrix text line " + std::to_string(line_no) +
                         ": expected only '0' and '1'");
    }
    rows.push_back(line);
  }
  if (rows.empty()) throw InvalidInput("matrix text contains no rows");
  return BitMatrix::from_rows(std::span<const std::string>(rows));
}

std::string format_matrix_text(const BitMatrix& m) {
  std::string out;
  for (const auto& r : m.to_strings()) {
    out += r;
    out += '\n';
  }
  return out;
}

}  // namespace hilbcode
