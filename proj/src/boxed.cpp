#include "hilbcode/boxed.hpp"

#include <sstream>
#include <stdexcept>

#include "hilbcode/error.hpp"

namespace hilbcode {

std::string Block::to_string() const {
  return {first() ? '1' : '0', second() ? '1' : '0'};
}

std::vector<std::string> BlockMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::string line;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != 0) line += ' ';
      line += at(i, j).to_string();
    }
    out.push_back(std::move(line));
  }
  return out;
}

BlockMatrix blocks_of(const BitMatrix& m) {
  if (m.cols() % 2 != 0 || m.rows() * 2 != m.cols()) {
    throw InvalidInput("block view needs an n x 2n matrix, got " + std::to_string(m.rows()) +
                       " x " + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  BlockMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.at(i, j) = Block::of(m.get(i, 2 * j), m.get(i, 2 * j + 1));
  }
  return b;
}

BitMatrix matrix_of(const BlockMatrix& b) {
  const std::size_t n = b.n();
  BitMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.set(i, 2 * j, b.at(i, j).first());
      m.set(i, 2 * j + 1, b.at(i, j).second());
    }
  }
  return m;
}

bool is_half_boxed(const BlockMatrix& b) {
  const std::size_t n = b.n();
  if (n < 2) return false;
  const std::size_t last = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Block x = b.at(i, j);
      if (i == last) {
        if (x != kBlock11) return false;
      } else if (j == last) {
        if (x != kBlock10) return false;
      } else if (i == j) {
        if (x != kBlock01) return false;
      } else if (!x.is_identical()) {
        return false;
      }
    }
  }
  return true;
}

bool has_complementary_pairs(const BlockMatrix& b) {
  const std::size_t n = b.n();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((b.at(i, j) ^ b.at(j, i)) != kBlock11) return false;
    }
  }
  return true;
}

bool is_boxed(const BlockMatrix& b) { return is_half_boxed(b) && has_complementary_pairs(b); }

FreePairAssignment::FreePairAssignment(std::size_t n) : n_(n), pairs_(count_for(n), false) {}

FreePairAssignment::FreePairAssignment(std::size_t n, std::vector<bool> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  if (pairs_.size() != count_for(n)) {
    throw InvalidInput("free pair assignment for n = " + std::to_string(n) + " needs " +
                       std::to_string(count_for(n)) + " entries");
  }
}

FreePairAssignment FreePairAssignment::from_index(std::size_t n, std::uint64_t mask) {
  FreePairAssignment f(n);
  const std::size_t m = f.size();
  for (std::size_t k = 0; k < m; ++k) f.pairs_[k] = (mask >> (m - 1 - k)) & 1u;
  return f;
}

std::size_t FreePairAssignment::slot(std::size_t i, std::size_t j) const {
  if (!(i < j && j + 2 <= n_)) throw std::out_of_range("free pair index outside i < j < n - 1");
  // Row k of the free triangle holds n - 2 - k entries.
  const std::size_t before = i * (n_ - 2) - i * (i - 1) / 2;
  return before + (j - i - 1);
}

BlockMatrix complete_boxed(const FreePairAssignment& free) {
  const std::size_t n = free.n();
  if (n < 2) throw InvalidInput("boxed matrices need n >= 2");
  const std::size_t last = n - 1;
  BlockMatrix b(n);
  for (std::size_t i = 0; i < last; ++i) {
    b.at(i, i) = kBlock01;
    b.at(i, last) = kBlock10;
    for (std::size_t j = i + 1; j < last; ++j) {
      const Block upper = free.get(i, j) ? kBlock11 : kBlock00;
      b.at(i, j) = upper;
      b.at(j, i) = upper ^ kBlock11;
    }
  }
  for (std::size_t j = 0; j < n; ++j) b.at(last, j) = kBlock11;
  return b;
}

FreePairAssignment free_pairs_of(const BlockMatrix& b) {
  if (!is_boxed(b)) throw InvalidInput("free pairs are defined for boxed matrices only");
  FreePairAssignment f(b.n());
  for (std::size_t i = 0; i + 1 < b.n(); ++i) {
    for (std::size_t j = i + 1; j + 1 < b.n(); ++j) f.set(i, j, b.at(i, j) == kBlock11);
  }
  return f;
}

void for_each_boxed(std::size_t n, const std::function<void(const BlockMatrix&)>& visit) {
  if (n < 2) throw InvalidInput("boxed matrices need n >= 2");
  if (n > kEnumerationBlockGuard) {
    throw GuardExceeded("boxed enumeration refused: n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(kEnumerationBlockGuard));
  }
  const std::uint64_t total = std::uint64_t{1} << FreePairAssignment::count_for(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    visit(complete_boxed(FreePairAssignment::from_index(n, mask)));
  }
}

std::vector<BlockMatrix> enumerate_boxed(std::size_t n) {
  std::vector<BlockMatrix> out;
  for_each_boxed(n, [&](const BlockMatrix& b) { out.push_back(b); });
  return out;
}

EquivalenceWitness EquivalenceWitness::identity(std::size_t n) {
  return {BitMatrix::identity(n), identity_permutation(2 * n)};
}

BitMatrix apply_witness(const EquivalenceWitness& w, const BitMatrix& m) {
  if (w.row_transform.cols() != m.rows() || w.column_permutation.size() != m.cols()) {
    throw InvalidInput("witness dimensions do not match the matrix");
  }
  return w.row_transform * apply_column_permutation(m, w.column_permutation);
}

namespace {

// Working state of the boxing algorithm: current matrix C = R * M * P.
class BoxingState {
 public:
  explicit BoxingState(const BitMatrix& m)
      : current_(m),
        transform_(BitMatrix::identity(m.rows())),
        perm_(identity_permutation(m.cols())) {}

  Block block(std::size_t i, std::size_t j) const {
    return Block::of(current_.get(i, 2 * j), current_.get(i, 2 * j + 1));
  }

  void add_row(std::size_t src, std::size_t dst) {
    current_.add_row(src, dst);
    transform_.add_row(src, dst);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    current_.swap_rows(a, b);
    transform_.swap_rows(a, b);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    current_.swap_cols(a, b);
    std::swap(perm_[a], perm_[b]);
  }

  // Permutes columns within [begin, cols) so that row `r` reads `pattern`
  // starting at `begin`. Each mismatch is fixed by swapping in the
  // lowest-indexed later column holding the wanted bit.
  void place_pattern(std::size_t r, std::size_t begin, std::string_view pattern) {
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      const std::size_t pos = begin + k;
      const bool want = pattern[k] == '1';
      if (current_.get(r, pos) == want) continue;
      std::size_t q = pos + 1;
      while (q < current_.cols() && current_.get(r, q) != want) ++q;
      if (q == current_.cols()) {
        throw std::logic_error("boxing: active row cannot be brought to pattern");
      }
      swap_cols(pos, q);
    }
  }

  BoxingResult finish() const {
    return {blocks_of(current_), EquivalenceWitness{transform_, perm_}};
  }

  const BitMatrix& current() const { return current_; }

 private:
  BitMatrix current_;
  BitMatrix transform_;
  Permutation perm_;
};

}  // namespace

BoxingResult box_code(const BitMatrix& m) {
  if (m.cols() % 2 != 0 || m.rows() * 2 != m.cols()) {
    throw InvalidInput("box_code needs an n x 2n generator, got " + std::to_string(m.rows()) +
                       " x " + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n < 2) throw InvalidInput("box_code needs code length at least 4");
  if (!is_self_dual_generator(m)) throw InvalidInput("box_code: input does not generate a self-dual code");

  if (const BlockMatrix b = blocks_of(m); is_boxed(b)) return {b, EquivalenceWitness::identity(n)};

  BoxingState s(m);
  const std::size_t last = n - 1;

  // Make the last row the all-ones word, replacing the highest row that
  // contributes to it.
  const auto x = solve_left(m, BitVector::ones(m.cols()));
  if (!x) throw std::logic_error("self-dual code without the all-ones word");
  std::size_t anchor = last;
  while (!x->get(anchor)) --anchor;
  for (std::size_t r = 0; r < n; ++r) {
    if (r != anchor && x->get(r)) s.add_row(r, anchor);
  }
  if (anchor != last) s.swap_rows(anchor, last);

  // Descend: pivot block (k, k) becomes 01 and the blocks below it identical
  // pairs. Rows k..last restricted to blocks k..last stay a self-dual
  // generator ending in the all-ones row.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    s.place_pattern(k, 2 * k, "01");
    for (std::size_t j = k + 1; j < last; ++j) {
      if (!s.block(j, k).is_identical()) s.add_row(k, j);
    }
  }
  // Base window of two blocks: the pivot row has weight 2 there.
  s.place_pattern(n - 2, 2 * (n - 2), "0110");

  // Ascend: clear row k's trailing blocks against the half-boxed window below.
  for (std::size_t k = n - 2; k-- > 0;) {
    for (std::size_t j = k + 1; j < last; ++j) {
      if (!s.block(k, j).is_identical()) s.add_row(j, k);
    }
    if (s.block(k, last) == kBlock01) s.add_row(last, k);
    if (s.block(k, k) == kBlock10) s.swap_cols(2 * k, 2 * k + 1);
  }

  BoxingResult result = s.finish();
  if (!is_boxed(result.boxed)) throw std::logic_error("boxing produced a non-boxed matrix");
  return result;
}

BlockMatrix parse_boxed_text(std::string_view text) {
  std::vector<std::vector<Block>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    std::istringstream fields(line);
    std::vector<Block> row;
    std::string tok;
    while (fields >> tok) {
      if (tok.size() != 2 || tok.find_first_not_of("01") != std::string::npos) {
        throw InvalidInput("boxed text line " + std::to_string(line_no) + ": bad block '" + tok +
                           "'");
      }
      row.push_back(Block::of(tok[0] == '1', tok[1] == '1'));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidInput("boxed text contains no rows");
  const std::size_t n = rows.size();
  BlockMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InvalidInput("boxed text: row " + std::to_string(i + 1) + " has " +
                         std::to_string(rows[i].size()) + " blocks, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) b.at(i, j) = rows[i][j];
  }
  return b;
}

std::string format_boxed_text(const BlockMatrix& b) {
  std::string out;
  for (const auto& line : b.to_strings()) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace hilbcode
