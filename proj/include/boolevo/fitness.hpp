#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boolevo/bitstring.hpp"
#include "boolevo/truth_table.hpp"
#include "boolevo/walsh.hpp"

namespace boolevo {

// fit1 subtracts the full weight penalty from the nonlinearity; fit2 scales
// the penalty by (1 - p) so early unbalanced solutions are discounted while
// the bias probability is still high.
enum class FitnessVariant { FullPenalty, WeightedPenalty };

inline std::string_view to_string(FitnessVariant v) {
  return v == FitnessVariant::FullPenalty ? "fit1" : "fit2";
}

inline FitnessVariant fitness_variant_from_string(std::string_view s) {
  if (s == "fit1") return FitnessVariant::FullPenalty;
  if (s == "fit2") return FitnessVariant::WeightedPenalty;
  throw std::invalid_argument("fitness variant must be fit1 or fit2, got '" + std::string(s) + "'");
}

// pen(x) = |w_H(x) - k|
inline std::size_t pen(const BitString& bits, std::size_t k) {
  const std::size_t w = hamming_weight(bits);
  return w > k ? w - k : k - w;
}

// w_pen(x) = (1 - p) * pen(x); equals pen at p == 0 and vanishes at p == 1.
inline double wpen(const BitString& bits, std::size_t k, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("wpen: p outside [0,1]");
  }
  return (1.0 - p) * static_cast<double>(pen(bits, k));
}

struct Evaluation {
  double fitness = 0.0;
  int nonlinearity = 0;
  std::size_t weight = 0;
};

// One fitness evaluation (one budget unit): Nl - pen under FullPenalty,
// Nl - (1-p)*pen under WeightedPenalty. A weight-k table scores exactly its
// nonlinearity under both variants.
inline Evaluation evaluate(const TruthTable& t, FitnessVariant variant, std::size_t k, double p) {
  const int nl = nonlinearity(walsh_transform(t));
  const std::size_t w = hamming_weight(t.bits);
  const auto deviation = static_cast<double>(w > k ? w - k : k - w);
  const double penalty =
      variant == FitnessVariant::FullPenalty ? deviation : (1.0 - p) * deviation;
  return Evaluation{static_cast<double>(nl) - penalty, nl, w};
}

}  // namespace boolevo
