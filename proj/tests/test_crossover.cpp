#include <catch2/catch_amalgamated.hpp>

#include "boolevo/crossover.hpp"
#include "boolevo/random.hpp"
#include "support/test_util.hpp"

using namespace boolevo;
using test::bits_of;
using test::bits_str;
using test::CountingRng;
using test::ScriptedRng;

namespace {

// Worked 8-bit example: parents of weight 4, parent picks y,x,x,y,y,x for
// the first six positions (u < 0.5 selects x).
const BitString kParentX = bits_of("01010110");
const BitString kParentY = bits_of("10001011");
const std::vector<double> kFig1Coins{0.9, 0.1, 0.1, 0.9, 0.9, 0.1};

BitString random_bits(std::size_t n, RandomSource& rng) {
  BitString b(n);
  for (auto& v : b) {
    v = static_cast<Bit>(rng.next_below(2));
  }
  return b;
}

}  // namespace

TEST_CASE("counter_cross reproduces the worked trace, tail forced to 0") {
  ScriptedRng rng{kFig1Coins, {}};
  const BitString z = counter_cross(kParentX, kParentY, 4, rng);
  CHECK(bits_str(z) == "11001100");
  CHECK(rng.exhausted());  // the two forced positions draw nothing
}

TEST_CASE("counter_cross with identical parents returns the parent") {
  RandomSource rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.next_below(40);
    const std::size_t k = rng.next_below(n + 1);
    BitString x(n, 0);
    for (std::size_t idx : sample_indices(rng, n, k)) {
      x[idx] = 1;
    }
    CHECK(counter_cross(x, x, k, rng) == x);
  }
}

TEST_CASE("extreme targets need no randomness") {
  ScriptedRng rng{{}, {}};
  CHECK(bits_str(counter_cross(kParentX, kParentY, 0, rng)) == "00000000");
  CHECK(bits_str(counter_cross(kParentX, kParentY, 8, rng)) == "11111111");
  CHECK(rng.exhausted());
}

TEST_CASE("counter_cross validates its inputs") {
  RandomSource rng(1);
  CHECK_THROWS_AS(counter_cross(bits_of("0101"), bits_of("011"), 2, rng), std::invalid_argument);
  CHECK_THROWS_AS(counter_cross(bits_of("0101"), bits_of("0110"), 5, rng), std::invalid_argument);
}

TEST_CASE("offspring weight is exactly k whatever the parents' weights") {
  RandomSource rng(97);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.next_below(64);
    const std::size_t k = rng.next_below(n + 1);
    const BitString x = random_bits(n, rng);
    const BitString y = random_bits(n, rng);
    const BitString z = counter_cross(x, y, k, rng);
    REQUIRE(z.size() == n);
    REQUIRE(hamming_weight(z) == k);
  }
}

TEST_CASE("phase 1 copies at most n-1 positions when 0 < k < n") {
  RandomSource base(57);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + base.next_below(63);
    const std::size_t k = 1 + base.next_below(n - 1);
    const BitString x = random_bits(n, base);
    const BitString y = random_bits(n, base);
    CountingRng<RandomSource> rng{base};
    counter_cross(x, y, k, rng);
    CHECK(rng.unit_draws <= n - 1);
  }
}

TEST_CASE("counter_cross_unbal with p = 0 is bit-exact to counter_cross") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    RandomSource setup(seed * 31 + 7);
    const std::size_t n = 1 + setup.next_below(48);
    const std::size_t k = setup.next_below(n + 1);
    const BitString x = random_bits(n, setup);
    const BitString y = random_bits(n, setup);
    RandomSource plain_rng(seed);
    RandomSource unbal_rng(seed);
    CHECK(counter_cross(x, y, k, plain_rng) == counter_cross_unbal(x, y, n, k, 0.0, unbal_rng));
  }
}

TEST_CASE("counter_cross_unbal with p = 1 never leaves COPY-SAME") {
  // Same coins as the worked trace; both tail positions draw r < 1.
  ScriptedRng rng{kFig1Coins, {}};
  rng.units.push_back(0.999);
  rng.units.push_back(0.0);
  const BitString z = counter_cross_unbal(kParentX, kParentY, 8, 4, 1.0, rng);
  CHECK(bits_str(z) == "11001111");
  CHECK(hamming_weight(z) == 6);
  CHECK(rng.exhausted());
}

TEST_CASE("phase 2 latches on the first r >= p") {
  // cnt1 saturates after the first four copies of 1; one extra 1 (r < p),
  // then the latch draw, then the tail is forced with no further draws.
  const BitString parent = bits_of("11110000");
  ScriptedRng rng{{0.4, 0.4, 0.4, 0.4, /*phase 2*/ 0.2, 0.9}, {}};
  const BitString z = counter_cross_unbal(parent, parent, 8, 4, 0.5, rng);
  CHECK(bits_str(z) == "11111000");
  CHECK(rng.exhausted());
}

TEST_CASE("counter_cross_unbal validates its inputs") {
  RandomSource rng(2);
  CHECK_THROWS_AS(counter_cross_unbal(bits_of("0101"), bits_of("0110"), 5, 2, 0.5, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(counter_cross_unbal(bits_of("0101"), bits_of("0110"), 4, 5, 0.5, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(counter_cross_unbal(bits_of("0101"), bits_of("0110"), 4, 2, -0.1, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(counter_cross_unbal(bits_of("0101"), bits_of("0110"), 4, 2, 1.5, rng),
                  std::invalid_argument);
}

TEST_CASE("degenerate k keys val to the trivially saturated counter") {
  // k = 0: cnt1's threshold is hit at the start, val = 1, so p = 1 keeps
  // copying ones; p = 0 matches the plain operator's all-zero output.
  const BitString zeros = bits_of("0000");
  ScriptedRng all_same{{0.0, 0.0, 0.0, 0.0}, {}};
  CHECK(bits_str(counter_cross_unbal(zeros, zeros, 4, 0, 1.0, all_same)) == "1111");
  ScriptedRng latch_now{{0.5}, {}};
  CHECK(bits_str(counter_cross_unbal(zeros, zeros, 4, 0, 0.0, latch_now)) == "0000");
}

TEST_CASE("unbalance amount follows the truncated geometric law") {
  // Parents 11110000 with k = 4: phase 1 always exits after position 3 with
  // cnt1 = 4, leaving 4 positions. P[j extra ones] = p^j (1-p) for j < 4 and
  // p^4 for j = 4, so the offspring weight is 4 + j.
  const BitString parent = bits_of("11110000");
  const double p = 0.5;
  const int trials = 20000;
  RandomSource rng(2024);
  std::vector<int> weight_counts(9, 0);
  for (int i = 0; i < trials; ++i) {
    const BitString z = counter_cross_unbal(parent, parent, 8, 4, p, rng);
    const std::size_t w = hamming_weight(z);
    REQUIRE(w >= 4);
    REQUIRE(w <= 8);
    ++weight_counts[w];
  }
  const double expected[] = {0.5, 0.25, 0.125, 0.0625, 0.0625};
  for (int j = 0; j <= 4; ++j) {
    const double q = expected[j];
    const double sigma = std::sqrt(trials * q * (1.0 - q));
    CHECK(std::abs(weight_counts[4 + j] - trials * q) <= 4.0 * sigma);
  }
}
