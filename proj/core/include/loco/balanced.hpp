#pragma once

#include "loco/codec.hpp"

namespace loco {

// A complement pair encoding one message: c1 is the bitwise complement of
// c0, their ranks sum to N(m,x)-1, and their disparities cancel.
struct BalancedPair {
  BitVec c0;  // left-most bit 0
  BitVec c1;  // left-most bit 1
};

// Running disparity of an encoding session, measured before each new
// codeword. One encoding stream per session; sessions are independent.
struct DisparityState {
  long long running = 0;
};

// Disparity p(c) = 2 * ones(c) - m under bipolar signaling.
int disparity(const BitVec& codeword);

// The pair with balanced index g_b, 0 <= g_b <= N(m,x)/2 - 1.
BalancedPair balanced_pair(const BigInt& g_b, const CardinalityTable& table);

// Balanced index: rank over set bits for a 0-leading codeword, over clear
// bits for a 1-leading one. Both members of a pair map to the same value.
BigInt bloco_index_of(const BitVec& codeword, const CardinalityTable& table);

// Pick the member that drives the running disparity toward zero. Ties
// (running disparity 0, or a zero-disparity pair) select c0.
const BitVec& select_codeword(const BalancedPair& pair,
                              const DisparityState& state);

// Balanced message length s - 1 (one-bit penalty for pair encoding).
int cb_message_length(const CardinalityTable& table);

// Stateful balanced encoding: forms the pair for decimal(message)+1, selects
// per the running disparity, then accumulates the selected disparity.
BitVec cb_encode_block(const BitVec& message, DisparityState& state,
                       const CardinalityTable& table);

// Stateless balanced decoding; both members of a pair decode identically.
BitVec cb_decode_block(const BitVec& codeword, const CardinalityTable& table);

}  // namespace loco
