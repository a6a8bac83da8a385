#include <catch2/catch_amalgamated.hpp>

#include "boolevo/bitstring.hpp"
#include "boolevo/random.hpp"
#include "support/test_util.hpp"

using namespace boolevo;
using test::bits_of;

TEST_CASE("hamming_weight counts the ones") {
  CHECK(hamming_weight(bits_of("00000000")) == 0);
  CHECK(hamming_weight(bits_of("01010110")) == 4);
  CHECK(hamming_weight(bits_of("11111111")) == 8);
  CHECK(hamming_weight(BitString{}) == 0);
}

TEST_CASE("support lists the 1-positions in order") {
  CHECK(support(bits_of("0000")).empty());
  CHECK(support(bits_of("0101")) == std::vector<std::size_t>{1, 3});
  CHECK(support(bits_of("1000")) == std::vector<std::size_t>{0});
}

TEST_CASE("|support| equals the Hamming weight") {
  RandomSource rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.next_below(64);
    BitString b(n);
    for (auto& v : b) {
      v = static_cast<Bit>(rng.next_below(2));
    }
    CHECK(support(b).size() == hamming_weight(b));
  }
}
