#pragma once

#include <stdexcept>

#include "loco/bits.hpp"
#include "loco/cardinality.hpp"

namespace loco {

class CodecError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input contains a forbidden pattern 0 1^y 0 or 1 0^y 1, y <= x.
class ConstraintViolation : public CodecError {
  using CodecError::CodecError;
};

// The input is a valid codeword but its index falls outside the message
// range [1, 2^s]; a stream consumer should treat this as corruption.
class NonMessageCodeword : public CodecError {
  using CodecError::CodecError;
};

// true iff bits contains no pattern from the forbidden set for this x.
bool satisfies_constraint(const BitVec& bits, int x);

// Message length s = floor(log2(N(m, x) - 2)), computed exactly from the
// bit length of N(m, x) - 2. Also the required adder width.
int message_length(const CardinalityTable& table);

// Lexicographic rank of a codeword. Rejects non-codewords: the rank sums
// are only meaningful over constraint-satisfying inputs.
BigInt index_of(const BitVec& codeword, const CardinalityTable& table);

// Optional record of the encoder's residual after each bit decision,
// left-most bit first.
struct EncodeTrace {
  BigInt initial;
  std::vector<BigInt> residuals;
};

// Inverse of index_of: the unique codeword of rank g, 0 <= g <= N(m,x)-1.
BitVec codeword_of(const BigInt& g, const CardinalityTable& table,
                   EncodeTrace* trace = nullptr);

// Self-clocked encoding: message block (length s) -> codeword of rank
// decimal(message) + 1. Never emits the all-zeros or all-ones word.
BitVec encode_block(const BitVec& message, const CardinalityTable& table);

// Inverse of encode_block. Throws ConstraintViolation for non-codewords and
// NonMessageCodeword for valid codewords outside the message range.
BitVec decode_block(const BitVec& codeword, const CardinalityTable& table);

BigInt bits_to_integer(const BitVec& bits);
BitVec integer_to_bits(BigInt value, int width);

}  // namespace loco
