#pragma once

// Dense linear algebra over F2 with rows packed into 64-bit words.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hilbcode {

/// A packed row of bits. Bits past size() in the last word are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  bool any() const;
  /// Standard bilinear form: parity of the common support.
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& other) const = default;
  auto operator<=>(const BitVector& other) const = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Matrix over F2; each row is a BitVector of length cols().
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::span<const std::string> rows);
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows);
  static BitMatrix from_rows(std::vector<BitVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }

  /// row[dst] += row[src]
  void add_row(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  BitMatrix transpose() const;
  std::vector<std::string> to_strings() const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

/// x * M for a coefficient row x of length M.rows().
BitVector left_multiply(const BitVector& x, const BitMatrix& m);

/// Column permutation: entry j names the source column of result column j.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
bool is_permutation(std::span<const std::size_t> perm);

/// Codeword counts indexed by Hamming weight 0..length.
struct WeightEnumerator {
  std::vector<std::uint64_t> counts;

  std::uint64_t at(std::size_t weight) const {
    return weight < counts.size() ? counts[weight] : 0;
  }
  std::uint64_t total() const;
  /// (weight, count) pairs with nonzero count, ascending weight.
  std::vector<std::pair<std::size_t, std::uint64_t>> nonzero() const;

  bool operator==(const WeightEnumerator& other) const = default;
  auto operator<=>(const WeightEnumerator& other) const = default;
};

/// Largest rank for which codewords are walked exhaustively.
inline constexpr std::size_t kEnumerationRankGuard = 28;

/// Reduced row echelon basis of the row space (leftmost pivots, zero rows dropped).
BitMatrix row_echelon_basis(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// True iff M * M^T = 0 and rank(M) = cols / 2. Throws on odd column count.
bool is_self_dual_generator(const BitMatrix& m);

/// Throws GuardExceeded when rank exceeds kEnumerationRankGuard.
WeightEnumerator weight_enumerator(const BitMatrix& m);

/// Minimum weight over nonzero codewords; throws on a zero row space.
std::size_t min_distance(const BitMatrix& m);

/// Coefficients x with x * M = target, or nullopt when target is outside the row space.
std::optional<BitVector> solve_left(const BitMatrix& m, const BitVector& target);

bool row_space_equal(const BitMatrix& a, const BitMatrix& b);

/// Column j of the result is column perm[j] of m.
BitMatrix apply_column_permutation(const BitMatrix& m, std::span<const std::size_t> perm);

// Matrix text format: one row of '0'/'1' per line; blank lines and '#' lines skipped.
BitMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const BitMatrix& m);

}  // namespace hilbcode
