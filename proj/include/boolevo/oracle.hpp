#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boolevo/truth_table.hpp"
#include "boolevo/walsh.hpp"

namespace boolevo {

// Brute-force reference implementations. These exist to check the fast paths
// and to generate ground truth for small instances; the cost guards throw
// instead of silently sampling.

// a.x as the parity of popcount(a AND x) on integer indices.
inline int dot_parity(std::uint64_t a, std::uint64_t x) {
  return std::popcount(a & x) & 1;
}

// Direct O(4^n) evaluation of W_f(a) = sum_x (-1)^(f(x) xor a.x).
inline WalshSpectrum naive_walsh(const TruthTable& t) {
  if (t.n < 1 || t.bits.size() != table_size(t.n)) {
    throw std::invalid_argument("naive_walsh: malformed truth table");
  }
  if (t.n > 14) {
    throw std::invalid_argument("naive_walsh: n above cost guard (14)");
  }
  const std::size_t size = t.bits.size();
  std::vector<std::int32_t> coeffs(size);
  for (std::size_t a = 0; a < size; ++a) {
    std::int32_t sum = 0;
    for (std::size_t x = 0; x < size; ++x) {
      sum += (t.bits[x] ^ dot_parity(a, x)) ? -1 : 1;
    }
    coeffs[a] = sum;
  }
  return WalshSpectrum{t.n, std::move(coeffs)};
}

// Nonlinearity as the minimum Hamming distance to the 2^(n+1) affine
// functions g(x) = a.x xor c, enumerated directly.
inline int affine_distance_nl(const TruthTable& t) {
  if (t.n < 1 || t.bits.size() != table_size(t.n)) {
    throw std::invalid_argument("affine_distance_nl: malformed truth table");
  }
  if (t.n > 12) {
    throw std::invalid_argument("affine_distance_nl: n above cost guard (12)");
  }
  const std::size_t size = t.bits.size();
  std::size_t best = size;
  for (std::size_t a = 0; a < size; ++a) {
    std::size_t d = 0;  // distance to a.x; distance to a.x xor 1 is size - d
    for (std::size_t x = 0; x < size; ++x) {
      d += static_cast<std::size_t>(t.bits[x] ^ dot_parity(a, x));
    }
    best = std::min({best, d, size - d});
  }
  return static_cast<int>(best);
}

struct BalancedOptimum {
  int max_nonlinearity = 0;
  std::uint64_t optima_count = 0;
};

// Enumerates every balanced n-variable truth table (Gosper's hack over
// weight-2^(n-1) masks) and reports the maximum nonlinearity and how many
// tables attain it. n = 4 visits C(16,8) = 12870 tables.
inline BalancedOptimum exhaustive_balanced_optimum(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("exhaustive_balanced_optimum: n above cost guard (4)");
  }
  const std::size_t size = table_size(n);
  const std::uint64_t limit = std::uint64_t{1} << size;
  BalancedOptimum out{-1, 0};
  std::uint64_t mask = (std::uint64_t{1} << (size / 2)) - 1;
  while (mask < limit) {
    BitString bits(size);
    for (std::size_t i = 0; i < size; ++i) {
      bits[i] = static_cast<Bit>((mask >> i) & 1);
    }
    const int nl = nonlinearity(naive_walsh(TruthTable{n, std::move(bits)}));
    if (nl > out.max_nonlinearity) {
      out.max_nonlinearity = nl;
      out.optima_count = 1;
    } else if (nl == out.max_nonlinearity) {
      ++out.optima_count;
    }
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

}  // namespace boolevo
