#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hilbcode/boxed.hpp"
#include "hilbcode/gf2.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense to_dense(const hilbcode::BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c) ? 1 : 0;
  return d;
}

/// Textbook Gaussian elimination on unpacked entries.
inline std::size_t naive_rank(Dense a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) a[r][k] ^= a[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

/// Every distinct codeword of the row space, from all 2^rows subset sums.
inline std::set<std::string> span_words(const hilbcode::BitMatrix& m) {
  std::set<std::string> words;
  const std::uint64_t total = std::uint64_t{1} << m.rows();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::string w(m.cols(), '0');
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!((mask >> r) & 1)) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.get(r, c)) w[c] = w[c] == '0' ? '1' : '0';
      }
    }
    words.insert(w);
  }
  return words;
}

inline std::map<std::size_t, std::uint64_t> brute_enumerator(const hilbcode::BitMatrix& m) {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& w : span_words(m)) ++out[static_cast<std::size_t>(std::count(w.begin(), w.end(), '1'))];
  return out;
}

inline std::map<std::size_t, std::uint64_t> as_map(const hilbcode::WeightEnumerator& e) {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& [w, c] : e.nonzero()) out[w] = c;
  return out;
}

/// Squares mod p by enumeration; returns +1, -1 or 0.
inline int brute_legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

/// Hilbert symbol at a small prime by searching primitive solutions of
/// z^2 = a x^2 + b y^2 modulo p^3 (odd p) or 2^5. With square factors of a
/// and b removed, Hensel's lemma makes these moduli sufficient.
/// Returns true for symbol value -1.
inline bool brute_hilbert(std::int64_t a, std::int64_t b, std::int64_t p) {
  const std::int64_t mod = p == 2 ? 32 : p * p * p;
  auto reduce = [&](std::int64_t v) {
    while (v % (p * p) == 0) v /= p * p;
    return ((v % mod) + mod) % mod;
  };
  const std::int64_t ra = reduce(a);
  const std::int64_t rb = reduce(b);
  std::vector<char> any_root(mod, 0);
  std::vector<char> unit_root(mod, 0);
  for (std::int64_t z = 0; z < mod; ++z) {
    const auto s = z * z % mod;
    any_root[s] = 1;
    if (z % p != 0) unit_root[s] = 1;
  }
  for (std::int64_t x = 0; x < mod; ++x) {
    for (std::int64_t y = 0; y < mod; ++y) {
      const auto rhs = (ra * (x * x % mod) + rb * (y * y % mod)) % mod;
      const bool xy_unit = x % p != 0 || y % p != 0;
      if (xy_unit ? any_root[rhs] : unit_root[rhs]) return false;
    }
  }
  return true;
}

/// All self-dual codes of length `len` (<= 10), each as its sorted codeword
/// list, grown one self-orthogonal vector at a time.
inline std::set<std::vector<std::uint32_t>> all_self_dual_codes(std::size_t len) {
  using Code = std::vector<std::uint32_t>;
  std::set<Code> level{Code{0}};
  const std::uint32_t words = std::uint32_t{1} << len;
  for (std::size_t dim = 0; dim < len / 2; ++dim) {
    std::set<Code> next;
    for (const auto& code : level) {
      for (std::uint32_t v = 1; v < words; ++v) {
        if (__builtin_popcount(v) % 2) continue;
        if (std::binary_search(code.begin(), code.end(), v)) continue;
        bool orthogonal = true;
        for (auto c : code) {
          if (__builtin_popcount(c & v) % 2) {
            orthogonal = false;
            break;
          }
        }
        if (!orthogonal) continue;
        Code grown = code;
        for (auto c : code) grown.push_back(c ^ v);
        std::sort(grown.begin(), grown.end());
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

/// Generator rows picked greedily from a codeword list. Bit c of a word is column c.
inline hilbcode::BitMatrix generator_from_words(const std::vector<std::uint32_t>& code, std::size_t len) {
  std::vector<std::uint32_t> basis;
  std::set<std::uint32_t> span{0};
  for (auto w : code) {
    if (span.count(w)) continue;
    basis.push_back(w);
    std::set<std::uint32_t> grown = span;
    for (auto s : span) grown.insert(s ^ w);
    span = std::move(grown);
  }
  hilbcode::BitMatrix m(basis.size(), len);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < len; ++c) m.set(r, c, (basis[r] >> c) & 1);
  return m;
}

inline std::map<std::size_t, std::uint64_t> words_enumerator(const std::vector<std::uint32_t>& code) {
  std::map<std::size_t, std::uint64_t> out;
  for (auto w : code) ++out[static_cast<std::size_t>(__builtin_popcount(w))];
  return out;
}

// Random instance generators.

inline hilbcode::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  hilbcode::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
  return m;
}

inline hilbcode::BitMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, n, n);
    if (naive_rank(to_dense(m)) == n) return m;
  }
}

inline hilbcode::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  hilbcode::Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline hilbcode::BlockMatrix random_boxed(std::mt19937_64& rng, std::size_t n) {
  hilbcode::FreePairAssignment f(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) f.set(i, j, rng() & 1);
  return hilbcode::complete_boxed(f);
}

}  // namespace oracle
