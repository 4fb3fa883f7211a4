#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "loco/bits.hpp"
#include "loco/cardinality.hpp"

namespace loco {

// Ternary line alphabet: Lo = bit 0 = level -A, Hi = bit 1 = level +A,
// Z = no-transmission symbol (disparity contribution 0).
enum class Symbol : std::uint8_t { Lo = 0, Hi = 1, Z = 2 };

enum class Bridging {
  Method1,  // unconditional z^x between codewords
  Method2,  // context-dependent bit or z; defined for x = 1 only
};

// (codeword . bridge)* codeword, each codeword m symbols, each bridge x.
struct SymbolStream {
  std::vector<Symbol> symbols;
  CodeParams params;
  Bridging method = Bridging::Method1;
};

class StreamFormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::size_t position;  // offset of the pattern's first symbol
  std::string pattern;
};

// The x bridging symbols between two adjacent codewords. prev_suffix and
// next_prefix are the x+1 right-most / left-most bits of those codewords.
std::vector<Symbol> bridge(Bridging method, const BitVec& prev_suffix,
                           const BitVec& next_prefix, int x);

SymbolStream assemble(const std::vector<BitVec>& codewords, Bridging method,
                      CodeParams params);

// Recovers the codewords, discarding bridges. parse(assemble(ws)) == ws.
std::vector<BitVec> parse(const SymbolStream& stream);

// Scans every maximal Z-free binary segment for forbidden patterns.
// Violations are data, not errors; empty means constraint-clean.
std::vector<Violation> validate(const SymbolStream& stream);

// Maximum number of bit durations between consecutive transitions. A
// transition occurs between successive non-Z symbols of different value;
// Z symbols neither create nor break one but each occupies a duration.
// Stream ends count as boundaries.
std::size_t max_transition_gap(const SymbolStream& stream);

// Running disparity sampled after each codeword frame (Hi +1, Lo -1, Z 0).
std::vector<long long> disparity_trace(const SymbolStream& stream);

// Text wire format: one character per symbol from {0, 1, z}, no separators.
std::string stream_to_text(const SymbolStream& stream);
SymbolStream stream_from_text(std::string_view text, CodeParams params,
                              Bridging method = Bridging::Method1);

// Binary wire format: 2 bits per symbol, MSB first within each byte
// (00 = Lo, 01 = Hi, 10 = Z); the reserved 11 pattern fills the tail of
// the final byte.
std::vector<std::uint8_t> stream_to_bytes(const SymbolStream& stream);
SymbolStream stream_from_bytes(std::span<const std::uint8_t> bytes,
                               CodeParams params,
                               Bridging method = Bridging::Method1);

}  // namespace loco
