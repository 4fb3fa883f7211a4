#include <doctest.h>

#include <stdexcept>

#include "loco/bits.hpp"

using namespace loco;

TEST_CASE("string round trip, left-most bit first") {
  const BitVec v = bitvec_from_string("100011");
  REQUIRE(v.size() == 6);
  CHECK(v[0] == 1);  // left-most bit
  CHECK(v[5] == 1);
  CHECK(to_string(v) == "100011");
  CHECK(to_string(BitVec{}) == "");
}

TEST_CASE("rejects non-bit characters") {
  CHECK_THROWS_AS(bitvec_from_string("10x"), std::invalid_argument);
  CHECK_THROWS_AS(bitvec_from_string("1 0"), std::invalid_argument);
}

TEST_CASE("complement flips every bit") {
  CHECK(to_string(complement(bitvec_from_string("001110"))) == "110001");
  CHECK(to_string(complement(bitvec_from_string("0"))) == "1");
}

TEST_CASE("ones_count") {
  CHECK(ones_count(bitvec_from_string("000000")) == 0);
  CHECK(ones_count(bitvec_from_string("001110")) == 3);
  CHECK(ones_count(bitvec_from_string("111111")) == 6);
}
