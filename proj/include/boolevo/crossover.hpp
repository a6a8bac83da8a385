#pragma once

#include <cstddef>
#include <stdexcept>

#include "boolevo/bitstring.hpp"

namespace boolevo {

// Counter-based balanced crossover. Positions are filled left to right: while
// both counters are below their thresholds (n-k for cnt0, k for cnt1) each
// position copies x_i or y_i with uniform probability and bumps the matching
// counter; once cnt0 == n-k the rest is filled with 1, once cnt1 == k with 0.
// The offspring weight is exactly k whatever the parents' weights are.
//
// Draw schedule: one next_unit() per copied position (u < 0.5 picks x),
// nothing for forced positions.
template <class Rng>
BitString counter_cross(const BitString& x, const BitString& y, std::size_t k, Rng& rng) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("counter_cross: parent lengths differ");
  }
  const std::size_t n = x.size();
  if (k > n) {
    throw std::invalid_argument("counter_cross: target weight exceeds length");
  }
  BitString z(n, 0);
  std::size_t cnt0 = 0;
  std::size_t cnt1 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cnt0 == n - k) {
      z[i] = 1;
    } else if (cnt1 == k) {
      z[i] = 0;
    } else {
      z[i] = rng.next_unit() < 0.5 ? x[i] : y[i];
      if (z[i]) {
        ++cnt1;
      } else {
        ++cnt0;
      }
    }
  }
  return z;
}

// Counter-based crossover with the adaptive bias strategy. Phase 1 is the
// plain operator until one counter saturates at position i; val is the bit
// whose counter hit its threshold (0 if cnt0 == n-k, else 1). Phase 2 runs
// the two-state completion: COPY-SAME writes val while r < p, the first
// r >= p writes the complement and latches COPY-COMPL, which fills the tail
// with the complement unconditionally. The chance that all n-i remaining
// positions keep val is p^(n-i).
//
// Draw schedule: phase 1 as in counter_cross; phase 2 one next_unit() per
// position while in COPY-SAME, none after the latch. With p == 0 the output
// is bit-identical to counter_cross under an equally seeded stream.
template <class Rng>
BitString counter_cross_unbal(const BitString& x, const BitString& y, std::size_t n,
                              std::size_t k, double p, Rng& rng) {
  if (x.size() != n || y.size() != n) {
    throw std::invalid_argument("counter_cross_unbal: parent lengths must equal n");
  }
  if (k > n) {
    throw std::invalid_argument("counter_cross_unbal: target weight exceeds length");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("counter_cross_unbal: unbalancedness probability outside [0,1]");
  }
  BitString z(n, 0);
  std::size_t cnt0 = 0;
  std::size_t cnt1 = 0;
  std::size_t i = 0;
  while (cnt0 < n - k && cnt1 < k) {
    z[i] = rng.next_unit() < 0.5 ? x[i] : y[i];
    if (z[i]) {
      ++cnt1;
    } else {
      ++cnt0;
    }
    ++i;
  }
  const Bit val = cnt0 == n - k ? 0 : 1;
  const Bit compl_val = static_cast<Bit>(val ^ 1);
  bool same = true;
  for (; i < n; ++i) {
    if (same) {
      if (rng.next_unit() < p) {
        z[i] = val;
      } else {
        z[i] = compl_val;
        same = false;
      }
    } else {
      z[i] = compl_val;
    }
  }
  return z;
}

}  // namespace boolevo
