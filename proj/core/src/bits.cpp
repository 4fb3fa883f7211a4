#include "loco/bits.hpp"

#include <stdexcept>

namespace loco {

std::string to_string(const BitVec& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitVec bitvec_from_string(std::string_view text) {
  BitVec out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      out.push_back(0);
    } else if (c == '1') {
      out.push_back(1);
    } else {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return out;
}

BitVec complement(BitVec bits) {
  for (auto& b : bits) b ^= 1;
  return bits;
}

int ones_count(const BitVec& bits) {
  int n = 0;
  for (auto b : bits) n += b;
  return n;
}

}  // namespace loco
