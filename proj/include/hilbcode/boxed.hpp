#pragma once

// Block-matrix view of n x 2n generator matrices and the boxed canonical form.
//
// A block matrix B is half-boxed when
//   (1) its bottom row is all 11,
//   (2) its last column is 10 except the final 11,
//   (3) its diagonal is 01 except the final 11,
//   (4) every other block is an identical pair (00 or 11),
// and boxed when additionally b_ij + b_ji = 11 for all distinct i, j < n - 1
// (0-based). Every boxed matrix generates a self-dual code, and every
// self-dual code of length >= 4 is equivalent to one with a boxed generator.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbcode/gf2.hpp"

namespace hilbcode {

/// A pair of adjacent bits (columns 2j, 2j+1); the first bit is the high bit.
struct Block {
  std::uint8_t bits = 0;

  static constexpr Block of(bool first, bool second) {
    return Block{static_cast<std::uint8_t>((first ? 2 : 0) | (second ? 1 : 0))};
  }
  constexpr bool first() const { return bits & 2u; }
  constexpr bool second() const { return bits & 1u; }
  constexpr bool is_identical() const { return bits == 0 || bits == 3; }
  constexpr Block operator^(Block other) const {
    return Block{static_cast<std::uint8_t>(bits ^ other.bits)};
  }
  std::string to_string() const;

  constexpr bool operator==(const Block&) const = default;
  constexpr auto operator<=>(const Block&) const = default;
};

inline constexpr Block kBlock00{0};
inline constexpr Block kBlock01{1};
inline constexpr Block kBlock10{2};
inline constexpr Block kBlock11{3};

class BlockMatrix {
 public:
  BlockMatrix() = default;
  /// n x n blocks, all 00.
  explicit BlockMatrix(std::size_t n) : n_(n), blocks_(n * n) {}

  std::size_t n() const { return n_; }
  Block at(std::size_t i, std::size_t j) const { return blocks_[i * n_ + j]; }
  Block& at(std::size_t i, std::size_t j) { return blocks_[i * n_ + j]; }

  /// Rows as space-separated blocks, e.g. "01 10".
  std::vector<std::string> to_strings() const;

  bool operator==(const BlockMatrix&) const = default;
  auto operator<=>(const BlockMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
};

/// Requires an n x 2n matrix.
BlockMatrix blocks_of(const BitMatrix& m);
BitMatrix matrix_of(const BlockMatrix& b);

/// Properties (1)-(4).
bool is_half_boxed(const BlockMatrix& b);
/// b_ij ^ b_ji == 11 for all distinct i, j < n - 1.
bool has_complementary_pairs(const BlockMatrix& b);
bool is_boxed(const BlockMatrix& b);

/// Free upper-triangle entries b_ij, i < j < n - 1 (0-based), stored row by
/// row; true stands for 11 and false for 00.
class FreePairAssignment {
 public:
  explicit FreePairAssignment(std::size_t n);
  FreePairAssignment(std::size_t n, std::vector<bool> pairs);

  /// Bits taken from `mask`, first pair in the most significant position.
  static FreePairAssignment from_index(std::size_t n, std::uint64_t mask);

  static std::size_t count_for(std::size_t n) { return n < 2 ? 0 : (n - 1) * (n - 2) / 2; }

  std::size_t n() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  bool get(std::size_t i, std::size_t j) const { return pairs_[slot(i, j)]; }
  void set(std::size_t i, std::size_t j, bool ones) { pairs_[slot(i, j)] = ones; }
  const std::vector<bool>& pairs() const { return pairs_; }

  bool operator==(const FreePairAssignment&) const = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;
  std::size_t n_;
  std::vector<bool> pairs_;
};

/// The unique boxed matrix with the given free entries.
BlockMatrix complete_boxed(const FreePairAssignment& free);
/// Inverse of complete_boxed on boxed input.
FreePairAssignment free_pairs_of(const BlockMatrix& b);

/// Largest block dimension accepted by enumerate_boxed: 2^21 matrices.
inline constexpr std::size_t kEnumerationBlockGuard = 8;

/// All boxed matrices of block dimension n, in lexicographic order of the
/// free-pair bits. Throws GuardExceeded above kEnumerationBlockGuard.
std::vector<BlockMatrix> enumerate_boxed(std::size_t n);
/// Streaming form of enumerate_boxed.
void for_each_boxed(std::size_t n, const std::function<void(const BlockMatrix&)>& visit);

/// R * (M with columns permuted by column_permutation).
struct EquivalenceWitness {
  BitMatrix row_transform;
  Permutation column_permutation;

  static EquivalenceWitness identity(std::size_t n);
  bool operator==(const EquivalenceWitness&) const = default;
};

struct BoxingResult {
  BlockMatrix boxed;
  EquivalenceWitness witness;
};

/// Carries a self-dual n x 2n generator (n >= 2) to boxed form. The returned
/// witness satisfies apply_witness(witness, m) == matrix_of(boxed). Input that
/// is already boxed comes back unchanged with the identity witness.
BoxingResult box_code(const BitMatrix& m);

BitMatrix apply_witness(const EquivalenceWitness& w, const BitMatrix& m);

// Boxed text format: n lines of n space-separated blocks; '#' lines skipped.
BlockMatrix parse_boxed_text(std::string_view text);
std::string format_boxed_text(const BlockMatrix& b);

}  // namespace hilbcode
