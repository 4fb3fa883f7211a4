#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loco {

// Bit vectors are stored left to right: bits[0] is the left-most (most
// significant) bit, i.e. c_{m-1} in the c_{m-1}..c_0 convention. All
// textual I/O prints the left-most bit first.
using BitVec = std::vector<std::uint8_t>;

std::string to_string(const BitVec& bits);

// Accepts '0'/'1', throws std::invalid_argument on anything else.
BitVec bitvec_from_string(std::string_view text);

BitVec complement(BitVec bits);

int ones_count(const BitVec& bits);

}  // namespace loco
