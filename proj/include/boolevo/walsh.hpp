#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boolevo/truth_table.hpp"

namespace boolevo {

// Walsh spectrum of an n-variable function: coeffs[a] = W_f(a), the
// correlation of f with the linear function a.x, with a read as an integer
// index. All coefficients are even for n >= 1 and |W_f(a)| <= 2^n; the sum
// of squares is exactly 2^(2n) (Parseval).
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int32_t> coeffs;

  bool operator==(const WalshSpectrum&) const = default;
};

// Fast Walsh-Hadamard transform of the (-1)^f encoding, O(n * 2^n), exact
// integer arithmetic throughout. coeffs[a] = sum_x (-1)^(f(x) xor a.x).
inline WalshSpectrum walsh_transform(const TruthTable& t) {
  if (t.n < 1 || t.bits.size() != table_size(t.n)) {
    throw std::invalid_argument("walsh_transform: malformed truth table");
  }
  const std::size_t size = t.bits.size();
  std::vector<std::int32_t> w(size);
  for (std::size_t i = 0; i < size; ++i) {
    w[i] = t.bits[i] ? -1 : 1;
  }
  for (std::size_t step = 1; step < size; step <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * step) {
      for (std::size_t j = block; j < block + step; ++j) {
        const std::int32_t a = w[j];
        const std::int32_t b = w[j + step];
        w[j] = a + b;
        w[j + step] = a - b;
      }
    }
  }
  return WalshSpectrum{t.n, std::move(w)};
}

inline std::int32_t max_abs_coeff(const WalshSpectrum& s) {
  std::int32_t best = 0;
  for (std::int32_t c : s.coeffs) {
    const std::int32_t a = c < 0 ? -c : c;
    if (a > best) {
      best = a;
    }
  }
  return best;
}

// Nl(f) = 2^(n-1) - max_a |W_f(a)| / 2; exact since every |W_f(a)| is even.
inline int nonlinearity(const WalshSpectrum& s) {
  if (s.n < 1 || s.coeffs.size() != table_size(s.n)) {
    throw std::invalid_argument("nonlinearity: malformed spectrum");
  }
  return static_cast<int>(table_size(s.n) / 2) - max_abs_coeff(s) / 2;
}

}  // namespace boolevo
