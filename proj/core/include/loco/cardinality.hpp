#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace loco {

// Cardinalities grow like 2^(0.69 m); everything downstream needs them exact,
// so all counts and codeword indices are arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

struct CodeParams {
  int m = 0;  // codeword length in bits
  int x = 0;  // constraint parameter: forbids 0 1^y 0 and 1 0^y 1, 1 <= y <= x
};

// Memoized code cardinalities N(i, x) for i in [-x+1, m], built once from the
// recursion N(i) = N(i-1) + N(i-x-1) with N(i) = 2 for i <= 1. Immutable
// after construction and safe to share across concurrent readers.
class CardinalityTable {
 public:
  explicit CardinalityTable(CodeParams params);

  const CodeParams& params() const { return params_; }
  int m() const { return params_.m; }
  int x() const { return params_.x; }

  /// N(i, x); i must lie in [-x+1, m].
  const BigInt& count(int i) const;

 private:
  CodeParams params_;
  std::vector<BigInt> values_;  // values_[i + x - 1] holds N(i, x)
};

// Exact halving of an even cardinality; throws std::logic_error on odd input
// (N(m, x) is always even, so oddness means a corrupted table).
BigInt half(const BigInt& value);

// Sizes of the five prefix groups of a length-m code. They partition the
// code: n1+..+n5 = N(m, x), and n1+n2 = n3+n4+n5 (the complement halves).
struct GroupCardinalities {
  BigInt n1, n2, n3, n4, n5;
};

GroupCardinalities group_cardinalities(const CardinalityTable& table, int m);

// Per-group index shifts between a codeword of length m+1 and its
// corresponding codeword of length m (groups 1-3) or m-x (groups 4-5).
struct IndexShifts {
  BigInt zeta1, zeta2, zeta3, zeta4, zeta5;
};

IndexShifts index_shifts(const CardinalityTable& table, int m_plus_1);

}  // namespace loco
