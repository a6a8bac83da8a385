#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace boolevo {

// Chromosomes and truth-table columns are plain bit sequences; every entry
// is 0 or 1.
using Bit = std::uint8_t;
using BitString = std::vector<Bit>;

inline std::size_t hamming_weight(const BitString& bits) {
  std::size_t w = 0;
  for (Bit b : bits) {
    w += b;
  }
  return w;
}

// Indices of the 1-entries, ascending. |support(x)| == hamming_weight(x).
inline std::vector<std::size_t> support(const BitString& bits) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) {
      idx.push_back(i);
    }
  }
  return idx;
}

}  // namespace boolevo
