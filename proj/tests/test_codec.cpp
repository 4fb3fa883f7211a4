#include <doctest.h>

#include "loco/codec.hpp"

using namespace loco;

namespace {
BitVec bv(const char* s) { return bitvec_from_string(s); }
}  // namespace

TEST_CASE("constraint detection") {
  CHECK(satisfies_constraint(bv("000000"), 1));
  CHECK(satisfies_constraint(bv("111111"), 1));
  CHECK_FALSE(satisfies_constraint(bv("010"), 1));
  CHECK_FALSE(satisfies_constraint(bv("101"), 1));
  CHECK(satisfies_constraint(bv("0110"), 1));
  CHECK_FALSE(satisfies_constraint(bv("0110"), 2));
  CHECK(satisfies_constraint(bv("011110"), 2));
  CHECK_FALSE(satisfies_constraint(bv("100101"), 1));
}

TEST_CASE("message length") {
  CHECK(message_length(CardinalityTable({6, 1})) == 4);   // floor(log2 24)
  CHECK(message_length(CardinalityTable({18, 1})) == 13);
  CHECK(message_length(CardinalityTable({13, 2})) == 8);
  CHECK(message_length(CardinalityTable({2, 1})) == 1);
  CHECK_THROWS_AS(message_length(CardinalityTable({1, 1})),
                  std::invalid_argument);  // N = 2 leaves no usable codeword
}

TEST_CASE("ranking matches the length-6, x=1 code") {
  const CardinalityTable t({6, 1});
  CHECK(index_of(bv("011001"), t) == 9);
  CHECK(index_of(bv("111110"), t) == 24);
  CHECK(index_of(bv("000000"), t) == 0);
  CHECK(index_of(bv("111111"), t) == 25);
  CHECK_THROWS_AS(index_of(bv("010101"), t), ConstraintViolation);
  CHECK_THROWS_AS(index_of(bv("0110"), t), std::invalid_argument);
}

TEST_CASE("rank and unrank are inverse over the whole code") {
  const CardinalityTable t({10, 2});
  const BigInt total = t.count(10);
  BitVec prev;
  for (BigInt g = 0; g < total; ++g) {
    const BitVec cw = codeword_of(g, t);
    CHECK(satisfies_constraint(cw, 2));
    CHECK(index_of(cw, t) == g);
    if (g > 0) CHECK(prev < cw);  // lexicographic order isomorphism
    prev = cw;
  }
  CHECK_THROWS_AS(codeword_of(total, t), std::out_of_range);
  CHECK_THROWS_AS(codeword_of(BigInt(-1), t), std::out_of_range);
}

TEST_CASE("unranking records the residual trace") {
  const CardinalityTable t({6, 1});
  EncodeTrace trace;
  const BitVec cw = codeword_of(BigInt(15), t, &trace);
  CHECK(to_string(cw) == "100011");
  CHECK(trace.initial == 15);
  REQUIRE(trace.residuals.size() == 6);
  const int expected[6] = {2, 2, 2, 2, 1, 0};
  for (int i = 0; i < 6; ++i) CHECK(trace.residuals[static_cast<std::size_t>(i)] == expected[i]);
}

TEST_CASE("block codec for length 6, x = 1") {
  const CardinalityTable t({6, 1});
  CHECK(to_string(encode_block(bv("1110"), t)) == "100011");
  CHECK(to_string(encode_block(bv("0000"), t)) == "000001");
  CHECK(to_string(encode_block(bv("1111"), t)) == "100110");
  CHECK(to_string(decode_block(bv("100011"), t)) == "1110");
  for (int v = 0; v < 16; ++v) {
    const BitVec msg = integer_to_bits(BigInt(v), 4);
    CHECK(decode_block(encode_block(msg, t), t) == msg);
  }
}

TEST_CASE("block codec rejects bad inputs") {
  const CardinalityTable t({6, 1});
  CHECK_THROWS_AS(encode_block(bv("111"), t), std::invalid_argument);
  CHECK_THROWS_AS(decode_block(bv("010101"), t), ConstraintViolation);
  // valid codewords outside [1, 2^s]: index 0 and indices 17..25
  CHECK_THROWS_AS(decode_block(bv("000000"), t), NonMessageCodeword);
  CHECK_THROWS_AS(decode_block(bv("110011"), t), NonMessageCodeword);
  CHECK_THROWS_AS(decode_block(bv("111111"), t), NonMessageCodeword);
}

TEST_CASE("self-clocking: encoder never emits a constant codeword") {
  const CardinalityTable t({8, 1});
  const int s = message_length(t);
  for (int v = 0; v < (1 << s); ++v) {
    const BitVec cw = encode_block(integer_to_bits(BigInt(v), s), t);
    CHECK(ones_count(cw) > 0);
    CHECK(ones_count(cw) < 8);
  }
}

TEST_CASE("integer/bit conversions") {
  CHECK(bits_to_integer(bv("1110")) == 14);
  CHECK(bits_to_integer(BitVec{}) == 0);
  CHECK(to_string(integer_to_bits(BigInt(14), 4)) == "1110");
  CHECK(to_string(integer_to_bits(BigInt(1), 5)) == "00001");
  CHECK_THROWS_AS(integer_to_bits(BigInt(16), 4), std::invalid_argument);
  CHECK_THROWS_AS(integer_to_bits(BigInt(-1), 4), std::invalid_argument);
}
