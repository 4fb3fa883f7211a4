#include "loco/cardinality.hpp"

#include <algorithm>
#include <stdexcept>

namespace loco {

CardinalityTable::CardinalityTable(CodeParams params) : params_(params) {
  if (params.m < 1) throw std::invalid_argument("codeword length m must be >= 1");
  if (params.x < 1) throw std::invalid_argument("constraint parameter x must be >= 1");
  values_.resize(static_cast<std::size_t>(params.m + params.x));
  for (int i = -params.x + 1; i <= std::min(1, params.m); ++i) {
    values_[static_cast<std::size_t>(i + params.x - 1)] = 2;
  }
  for (int i = 2; i <= params.m; ++i) {
    const std::size_t at = static_cast<std::size_t>(i + params.x - 1);
    values_[at] = values_[at - 1] + values_[at - static_cast<std::size_t>(params.x) - 1];
  }
}

const BigInt& CardinalityTable::count(int i) const {
  if (i < -params_.x + 1 || i > params_.m) {
    throw std::out_of_range("cardinality index outside [-x+1, m]");
  }
  return values_[static_cast<std::size_t>(i + params_.x - 1)];
}

BigInt half(const BigInt& value) {
  if (bit_test(value, 0)) throw std::logic_error("expected an even cardinality");
  return value >> 1;
}

GroupCardinalities group_cardinalities(const CardinalityTable& table, int m) {
  if (m < 2 || m > table.m()) throw std::out_of_range("group cardinalities need 2 <= m <= table length");
  const int x = table.x();
  GroupCardinalities g;
  g.n1 = half(table.count(m - 1));
  g.n2 = half(table.count(m - x - 1));
  g.n3 = half(table.count(m - 1) - table.count(m - x - 1));
  g.n4 = g.n2;
  g.n5 = g.n2;
  return g;
}

IndexShifts index_shifts(const CardinalityTable& table, int m_plus_1) {
  if (m_plus_1 < 3 || m_plus_1 > table.m()) {
    throw std::out_of_range("index shifts need 3 <= m+1 <= table length");
  }
  const int m = m_plus_1 - 1;
  const int x = table.x();
  IndexShifts z;
  z.zeta1 = 0;
  z.zeta2 = -half(table.count(m) - table.count(m - x));
  z.zeta3 = table.count(m - x);
  z.zeta4 = half(table.count(m + 1));
  z.zeta5 = table.count(m);
  return z;
}

}  // namespace loco
