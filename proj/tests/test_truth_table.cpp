#include <catch2/catch_amalgamated.hpp>

#include "boolevo/random.hpp"
#include "boolevo/truth_table.hpp"
#include "support/test_util.hpp"

using namespace boolevo;
using Catch::Matchers::ContainsSubstring;
using test::bits_of;

TEST_CASE("parse reads binary strings, leftmost bit first") {
  const TruthTable t = parse_truth_table("0110");
  CHECK(t.n == 2);
  CHECK(t.bits == bits_of("0110"));
}

TEST_CASE("parse reads hex strings, leftmost nibble covering the low indices") {
  CHECK(parse_truth_table("6") == parse_truth_table("0110"));
  CHECK(parse_truth_table("1e") == parse_truth_table("00011110"));
  CHECK(parse_truth_table_hex("0110").bits.size() == 16);  // explicit hex, no binary precedence
}

TEST_CASE("format/parse round trips") {
  CHECK(format_truth_table(parse_truth_table("01010110")) == "01010110");

  RandomSource rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    BitString bits(table_size(n));
    for (auto& b : bits) {
      b = static_cast<Bit>(rng.next_below(2));
    }
    const TruthTable t = make_truth_table(n, bits);
    CHECK(parse_truth_table(format_truth_table(t)) == t);
    CHECK(parse_truth_table_hex(format_truth_table_hex(t)) == t);
  }
}

TEST_CASE("parse failures are reported distinctly") {
  CHECK_THROWS_WITH(parse_truth_table(""), ContainsSubstring("empty"));
  CHECK_THROWS_WITH(parse_truth_table("011"), ContainsSubstring("power of two"));
  CHECK_THROWS_WITH(parse_truth_table("abc"), ContainsSubstring("hex length"));
  CHECK_THROWS_WITH(parse_truth_table("01x0"), ContainsSubstring("invalid character"));
  CHECK_THROWS_WITH(parse_truth_table_hex("6g"), ContainsSubstring("invalid character"));
}

TEST_CASE("make_truth_table enforces the invariants") {
  CHECK_THROWS_WITH(make_truth_table(2, bits_of("011")), ContainsSubstring("wrong length"));
  CHECK_THROWS_WITH(make_truth_table(0, {}), ContainsSubstring("positive"));
  CHECK_THROWS_WITH(make_truth_table(1, BitString{0, 2}), ContainsSubstring("0 or 1"));
}

TEST_CASE("hex formatting needs at least one full nibble") {
  CHECK_THROWS_AS(format_truth_table_hex(parse_truth_table("01")), std::invalid_argument);
}

TEST_CASE("balancedness is weight exactly 2^(n-1)") {
  CHECK(is_balanced(parse_truth_table("0110")));
  CHECK_FALSE(is_balanced(parse_truth_table("0111")));
  CHECK(is_balanced(parse_truth_table("00011011")));
  CHECK(hamming_weight(parse_truth_table("00011011")) == 4);
}
