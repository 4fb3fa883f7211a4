#include "loco/balanced.hpp"

namespace loco {

int disparity(const BitVec& codeword) {
  return 2 * ones_count(codeword) - static_cast<int>(codeword.size());
}

BalancedPair balanced_pair(const BigInt& g_b, const CardinalityTable& table) {
  const BigInt& total = table.count(table.m());
  if (g_b < 0 || g_b >= half(total)) {
    throw std::out_of_range("balanced index out of [0, N(m,x)/2 - 1]");
  }
  BalancedPair pair;
  pair.c0 = codeword_of(g_b, table);
  pair.c1 = codeword_of(total - 1 - g_b, table);
  return pair;
}

BigInt bloco_index_of(const BitVec& codeword, const CardinalityTable& table) {
  if (table.m() < 2) throw std::invalid_argument("codec requires m >= 2");
  const int m = table.m();
  const int x = table.x();
  if (static_cast<int>(codeword.size()) != m) {
    throw std::invalid_argument("codeword length does not match table");
  }
  if (!satisfies_constraint(codeword, x)) {
    throw ConstraintViolation("input contains a forbidden pattern; index undefined");
  }
  const std::uint8_t counted = codeword[0] ? 0 : 1;
  BigInt sum = 0;
  for (int i = 0; i <= m - 2; ++i) {
    if (codeword[static_cast<std::size_t>(m - 1 - i)] == counted) sum += table.count(i - x + 1);
  }
  return half(sum);
}

const BitVec& select_codeword(const BalancedPair& pair, const DisparityState& state) {
  const int p0 = disparity(pair.c0);
  if (state.running == 0 || p0 == 0) return pair.c0;
  if (state.running > 0) return p0 <= 0 ? pair.c0 : pair.c1;
  return p0 >= 0 ? pair.c0 : pair.c1;
}

int cb_message_length(const CardinalityTable& table) {
  if (table.count(table.m()) < 6) {
    throw std::invalid_argument("code too small: N(m, x) < 6 leaves no balanced message");
  }
  return message_length(table) - 1;
}

BitVec cb_encode_block(const BitVec& message, DisparityState& state,
                       const CardinalityTable& table) {
  const int s = cb_message_length(table);
  if (static_cast<int>(message.size()) != s) {
    throw std::invalid_argument("message block must be exactly s - 1 bits");
  }
  const BalancedPair pair = balanced_pair(bits_to_integer(message) + 1, table);
  const BitVec& chosen = select_codeword(pair, state);
  state.running += disparity(chosen);
  return chosen;
}

BitVec cb_decode_block(const BitVec& codeword, const CardinalityTable& table) {
  const int s = cb_message_length(table);
  const BigInt g_b = bloco_index_of(codeword, table);
  if (g_b < 1 || g_b > (BigInt(1) << s)) {
    throw NonMessageCodeword("balanced index outside the message range [1, 2^s]");
  }
  return integer_to_bits(g_b - 1, s);
}

}  // namespace loco
