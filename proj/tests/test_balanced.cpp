#include <doctest.h>

#include <random>

#include "loco/balanced.hpp"

using namespace loco;

namespace {
BitVec bv(const char* s) { return bitvec_from_string(s); }
}  // namespace

TEST_CASE("codeword disparity") {
  CHECK(disparity(bv("000000")) == -6);
  CHECK(disparity(bv("000111")) == 0);
  CHECK(disparity(bv("001111")) == 2);
  CHECK(disparity(bv("111111")) == 6);
}

TEST_CASE("complement pairs of the length-6, x=1 code") {
  const CardinalityTable t({6, 1});
  struct Row {
    const char* c0;
    int p0;
    const char* c1;
  };
  // pairs indexed 0..12; p(c1) = -p(c0) always
  const Row rows[13] = {
      {"000000", -6, "111111"}, {"000001", -4, "111110"},
      {"000011", -2, "111100"}, {"000110", -2, "111001"},
      {"000111", 0, "111000"},  {"001100", -2, "110011"},
      {"001110", 0, "110001"},  {"001111", 2, "110000"},
      {"011000", -2, "100111"}, {"011001", 0, "100110"},
      {"011100", 0, "100011"},  {"011110", 2, "100001"},
      {"011111", 4, "100000"},
  };
  for (int g = 0; g < 13; ++g) {
    const BalancedPair pair = balanced_pair(BigInt(g), t);
    CHECK(to_string(pair.c0) == rows[g].c0);
    CHECK(to_string(pair.c1) == rows[g].c1);
    CHECK(pair.c1 == complement(pair.c0));
    CHECK(disparity(pair.c0) == rows[g].p0);
    CHECK(disparity(pair.c1) == -rows[g].p0);
    CHECK(bloco_index_of(pair.c0, t) == g);
    CHECK(bloco_index_of(pair.c1, t) == g);
  }
  CHECK_THROWS_AS(balanced_pair(BigInt(13), t), std::out_of_range);
}

TEST_CASE("both members of pair 6 rank to the same balanced index") {
  const CardinalityTable t({6, 1});
  CHECK(bloco_index_of(bv("001110"), t) == 6);
  CHECK(bloco_index_of(bv("110001"), t) == 6);
}

TEST_CASE("selection drives the running disparity toward zero") {
  const CardinalityTable t({6, 1});
  const BalancedPair skewed = balanced_pair(BigInt(2), t);   // p = -2 / +2
  const BalancedPair flat = balanced_pair(BigInt(4), t);     // p = 0 / 0

  CHECK(select_codeword(skewed, {.running = 0}) == skewed.c0);  // tie: c0
  CHECK(select_codeword(flat, {.running = 5}) == flat.c0);      // zero pair: c0
  CHECK(select_codeword(skewed, {.running = 4}) == skewed.c0);  // want p <= 0
  CHECK(select_codeword(skewed, {.running = -4}) == skewed.c1); // want p >= 0
}

TEST_CASE("balanced block codec round trip") {
  const CardinalityTable t({6, 1});
  CHECK(cb_message_length(t) == 3);
  DisparityState state;
  for (int v = 0; v < 8; ++v) {
    const BitVec msg = integer_to_bits(BigInt(v), 3);
    const BitVec cw = cb_encode_block(msg, state, t);
    CHECK(cb_decode_block(cw, t) == msg);
    CHECK(cb_decode_block(complement(cw), t) == msg);
  }
}

TEST_CASE("balanced decoding rejects out-of-range pairs") {
  const CardinalityTable t({6, 1});
  // pairs 0 and 9..12 carry no message (s^cb = 3 => messages map to 1..8)
  CHECK_THROWS_AS(cb_decode_block(bv("000000"), t), NonMessageCodeword);
  CHECK_THROWS_AS(cb_decode_block(bv("011111"), t), NonMessageCodeword);
  CHECK_THROWS_AS(cb_decode_block(bv("010101"), t), ConstraintViolation);
}

TEST_CASE("running disparity stays within m - 2 on a long random stream") {
  for (const auto [m, x] : {std::pair{6, 1}, {12, 1}, {11, 2}}) {
    const CardinalityTable t({m, x});
    const int s = cb_message_length(t);
    std::mt19937_64 rng(99);
    DisparityState state;
    for (int step = 0; step < 2000; ++step) {
      BitVec msg(static_cast<std::size_t>(s));
      for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 1);
      cb_encode_block(msg, state, t);
      CHECK(state.running <= m - 2);
      CHECK(state.running >= -(m - 2));
    }
  }
}
