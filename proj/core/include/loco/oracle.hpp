#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "loco/bits.hpp"

namespace loco {

// Enumeration walks all 2^m candidates; the cap bounds that cost.
inline constexpr int kDefaultEnumerationCap = 24;

// All length-m binary strings avoiding the forbidden patterns for this x,
// ascending lexicographic. Detection is an interior-run scan independent of
// the cardinality recursion and the codec.
std::vector<BitVec> enumerate_codebook(int m, int x,
                                       int cap = kDefaultEnumerationCap);

struct CertifyReport {
  bool pass = false;
  std::size_t codewords_checked = 0;
  std::vector<std::string> failures;
};

// Exhaustively certifies the codec against the enumerated codebook:
// rank/unrank round trip on every index, order isomorphism, complement
// rule, group cardinalities, and index shifts.
CertifyReport certify_codec(int m, int x, int cap = kDefaultEnumerationCap);

}  // namespace loco
