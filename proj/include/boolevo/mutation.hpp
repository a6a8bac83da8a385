#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "boolevo/bitstring.hpp"

namespace boolevo {

// Swap mutation: with probability p_m exchange one uniformly chosen
// 1-position with one uniformly chosen 0-position, preserving the Hamming
// weight. Constant strings have no swap pair and come back unchanged.
//
// Draw schedule: one gate draw always, then next_below(#ones) and
// next_below(#zeros) only when the mutation fires on a non-constant string.
template <class Rng>
BitString swap_mutation(BitString z, double p_m, Rng& rng) {
  if (z.empty()) {
    throw std::invalid_argument("swap_mutation: empty string");
  }
  if (!(p_m >= 0.0 && p_m <= 1.0)) {
    throw std::invalid_argument("swap_mutation: mutation probability outside [0,1]");
  }
  if (rng.next_unit() >= p_m) {
    return z;
  }
  const std::vector<std::size_t> ones = support(z);
  if (ones.empty() || ones.size() == z.size()) {
    return z;
  }
  std::vector<std::size_t> zeros;
  zeros.reserve(z.size() - ones.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!z[i]) {
      zeros.push_back(i);
    }
  }
  const std::size_t one_pos = ones[rng.next_below(ones.size())];
  const std::size_t zero_pos = zeros[rng.next_below(zeros.size())];
  z[one_pos] = 0;
  z[zero_pos] = 1;
  return z;
}

}  // namespace boolevo
