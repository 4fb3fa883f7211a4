#include "loco/codec.hpp"

namespace loco {

bool satisfies_constraint(const BitVec& bits, int x) {
  const int n = static_cast<int>(bits.size());
  for (int p = 0; p < n; ++p) {
    for (int y = 1; y <= x && p + y + 1 < n; ++y) {
      if (bits[static_cast<std::size_t>(p + y + 1)] != bits[static_cast<std::size_t>(p)]) continue;
      bool inner_run = true;
      for (int k = 1; k <= y; ++k) {
        if (bits[static_cast<std::size_t>(p + k)] == bits[static_cast<std::size_t>(p)]) {
          inner_run = false;
          break;
        }
      }
      if (inner_run) return false;
    }
  }
  return true;
}

int message_length(const CardinalityTable& table) {
  const BigInt usable = table.count(table.m()) - 2;
  if (usable < 2) throw std::invalid_argument("code too small: N(m, x) < 4 leaves no encodable message");
  return static_cast<int>(msb(usable));  // floor(log2), exact
}

static void check_codec_params(const BitVec& codeword, const CardinalityTable& table) {
  if (static_cast<int>(codeword.size()) != table.m()) {
    throw std::invalid_argument("codeword length does not match table");
  }
}

BigInt index_of(const BitVec& codeword, const CardinalityTable& table) {
  check_codec_params(codeword, table);
  const int m = table.m();
  const int x = table.x();
  if (!satisfies_constraint(codeword, x)) {
    throw ConstraintViolation("input contains a forbidden pattern; index undefined");
  }
  BigInt sum = 0;
  for (int i = 0; i <= m - 2; ++i) {
    if (codeword[static_cast<std::size_t>(m - 1 - i)]) sum += table.count(i - x + 1);
  }
  if (codeword[0]) sum += table.count(m);
  return half(sum);
}

BitVec codeword_of(const BigInt& g, const CardinalityTable& table, EncodeTrace* trace) {
  const int m = table.m();
  const int x = table.x();
  const BigInt& total = table.count(m);
  if (g < 0 || g >= total) throw std::out_of_range("codeword index out of [0, N(m,x)-1]");

  BitVec bits(static_cast<std::size_t>(m), 0);
  BigInt residual = g;
  if (trace) {
    trace->initial = g;
    trace->residuals.clear();
  }

  const BigInt upper_half = half(total);
  if (residual >= upper_half) {
    bits[0] = 1;
    residual -= upper_half;
  }
  if (trace) trace->residuals.push_back(residual);

  for (int i = m - 2; i >= 0; --i) {
    const BigInt threshold = half(table.count(i - x + 1));
    bool set_one = false;
    if (residual >= threshold) {
      bool forced_zero = false;
      if (bits[static_cast<std::size_t>(m - 2 - i)] == 0) {  // c_{i+1} = 0
        // Setting c_i = 1 here would start 0 1^j 0 if the residual sits in
        // the bracket [beta_{j-1}, beta_j); force c_i = 0 in that case.
        BigInt beta_prev = threshold;
        for (int j = 1; j <= x && i - j >= 0; ++j) {
          const BigInt beta = beta_prev + half(table.count(i - x + 1 - j));
          if (residual < beta) {
            forced_zero = true;
            break;
          }
          beta_prev = beta;
        }
      }
      if (!forced_zero) {
        set_one = true;
        residual -= threshold;
      }
    }
    bits[static_cast<std::size_t>(m - 1 - i)] = set_one ? 1 : 0;
    if (trace) trace->residuals.push_back(residual);
  }
  return bits;
}

BitVec encode_block(const BitVec& message, const CardinalityTable& table) {
  const int s = message_length(table);
  if (static_cast<int>(message.size()) != s) {
    throw std::invalid_argument("message block must be exactly s bits");
  }
  return codeword_of(bits_to_integer(message) + 1, table);
}

BitVec decode_block(const BitVec& codeword, const CardinalityTable& table) {
  const int s = message_length(table);
  const BigInt g = index_of(codeword, table);
  if (g < 1 || g > (BigInt(1) << s)) {
    throw NonMessageCodeword("codeword index outside the message range [1, 2^s]");
  }
  return integer_to_bits(g - 1, s);
}

BigInt bits_to_integer(const BitVec& bits) {
  BigInt value = 0;
  for (auto b : bits) value = (value << 1) | static_cast<int>(b);
  return value;
}

BitVec integer_to_bits(BigInt value, int width) {
  if (value < 0) throw std::invalid_argument("negative value");
  BitVec out(static_cast<std::size_t>(width), 0);
  for (int i = width - 1; i >= 0 && value != 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value & 1);
    value >>= 1;
  }
  if (value != 0) throw std::invalid_argument("value does not fit in the requested width");
  return out;
}

}  // namespace loco
