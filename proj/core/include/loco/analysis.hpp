#pragma once

#include <string>
#include <vector>

#include "loco/cardinality.hpp"

namespace loco {

enum class Variant { CLoco, CBLoco };

std::string variant_name(Variant variant);

struct RateReport {
  int m = 0;
  int x = 0;
  Variant variant = Variant::CLoco;
  int message_length = 0;  // exact rate numerator; denominator is m + x
  int adder_size = 0;      // equals message_length
  std::string rate_decimal;  // rounded to 4 decimal places
  double rate_value = 0.0;
};

RateReport rate_cloco(const CardinalityTable& table);
RateReport rate_cbloco(const CardinalityTable& table);

// Asymptotic maximum rate of an x-constrained code: log2 of the real root
// > 1 of t^(x+1) - t^x - 1, the characteristic polynomial of the
// cardinality recursion. Bracketed bisection to |f(t)| < tolerance.
double capacity(int x, double tolerance = 1e-12);

// Overall rate of an outer code of length n and w data bits whose n-w
// parity bits are re-encoded at rate r_loco with delta padding zeros.
struct OverallRate {
  long long n_ov = 0;
  bool rounded = false;  // (n - w + delta) / r_loco was not integral
  double exact = 0.0;    // w / n_ov
  double approx = 0.0;   // closed form in the two rates only
};

OverallRate overall_rate(long long w, long long n, long long delta,
                         double r_loco);

struct RateQuery {
  int m = 0;
  int x = 0;
  Variant variant = Variant::CLoco;
};

std::vector<RateReport> rate_table(const std::vector<RateQuery>& queries);

// Comma-separated record: m,x,variant,message_length,rate_decimal,adder_size
std::string rate_csv_row(const RateReport& report);

// Aligned plain-text table with a header row.
std::string format_rate_table(const std::vector<RateReport>& reports);

// Double approximation of log2 of a positive big integer.
double log2_approx(const BigInt& value);

}  // namespace loco
