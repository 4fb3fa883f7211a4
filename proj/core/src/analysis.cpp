#include "loco/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "loco/codec.hpp"

namespace loco {

std::string variant_name(Variant variant) {
  return variant == Variant::CLoco ? "cloco" : "cbloco";
}

// message_length / (m + x) rounded half-up to 4 decimal places, in exact
// integer arithmetic (the rate is always in (0, 1)).
static std::string rate_to_decimal(int numerator, int denominator) {
  const long long scaled = 10000LL * numerator;
  const long long rounded = (2 * scaled + denominator) / (2LL * denominator);
  std::ostringstream out;
  out << "0." << std::setw(4) << std::setfill('0') << rounded;
  return out.str();
}

static RateReport make_report(const CardinalityTable& table, Variant variant, int s) {
  RateReport report;
  report.m = table.m();
  report.x = table.x();
  report.variant = variant;
  report.message_length = s;
  report.adder_size = s;
  const int denom = table.m() + table.x();
  report.rate_decimal = rate_to_decimal(s, denom);
  report.rate_value = static_cast<double>(s) / denom;
  return report;
}

RateReport rate_cloco(const CardinalityTable& table) {
  return make_report(table, Variant::CLoco, message_length(table));
}

RateReport rate_cbloco(const CardinalityTable& table) {
  if (table.count(table.m()) < 6) {
    throw std::invalid_argument("code too small: N(m, x) < 6 leaves no balanced message");
  }
  return make_report(table, Variant::CBLoco, message_length(table) - 1);
}

double capacity(int x, double tolerance) {
  if (x < 1) throw std::invalid_argument("x must be >= 1");
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  const auto f = [x](double t) { return std::pow(t, x + 1) - std::pow(t, x) - 1.0; };
  double lo = 1.0, hi = 2.0;  // f(1) = -1, f(2) = 2^x - 1 > 0
  double mid = 1.5;
  while (true) {
    mid = 0.5 * (lo + hi);
    const double v = f(mid);
    if (std::abs(v) < tolerance || hi - lo < 1e-16) break;
    (v < 0 ? lo : hi) = mid;
  }
  return std::log2(mid);
}

OverallRate overall_rate(long long w, long long n, long long delta, double r_loco) {
  if (w <= 0 || w > n) throw std::invalid_argument("need 0 < w <= n");
  if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
  if (!(r_loco > 0.0) || r_loco > 1.0) throw std::invalid_argument("need 0 < r_loco <= 1");
  OverallRate result;
  const double expanded = static_cast<double>(n - w + delta) / r_loco;
  const long long nearest = std::llround(expanded);
  result.rounded = std::abs(expanded - static_cast<double>(nearest)) > 1e-9;
  result.n_ov = w + nearest;
  result.exact = static_cast<double>(w) / static_cast<double>(result.n_ov);
  const double r_outer = static_cast<double>(w) / static_cast<double>(n);
  result.approx = r_outer * r_loco / (r_outer * r_loco + (1.0 - r_outer));
  return result;
}

std::vector<RateReport> rate_table(const std::vector<RateQuery>& queries) {
  std::vector<RateReport> reports;
  reports.reserve(queries.size());
  for (const RateQuery& q : queries) {
    CardinalityTable table({q.m, q.x});
    reports.push_back(q.variant == Variant::CLoco ? rate_cloco(table) : rate_cbloco(table));
  }
  return reports;
}

std::string rate_csv_row(const RateReport& r) {
  std::ostringstream out;
  out << r.m << ',' << r.x << ',' << variant_name(r.variant) << ','
      << r.message_length << ',' << r.rate_decimal << ',' << r.adder_size;
  return out.str();
}

std::string format_rate_table(const std::vector<RateReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "m" << std::setw(4) << "x" << std::setw(8)
      << "variant" << std::setw(10) << "msg_len" << std::setw(8) << "rate"
      << std::setw(7) << "adder" << '\n';
  for (const RateReport& r : reports) {
    out << std::left << std::setw(6) << r.m << std::setw(4) << r.x << std::setw(8)
        << variant_name(r.variant) << std::setw(10) << r.message_length
        << std::setw(8) << r.rate_decimal << std::setw(7) << r.adder_size << '\n';
  }
  return out.str();
}

double log2_approx(const BigInt& value) {
  if (value <= 0) throw std::invalid_argument("log2 of a nonpositive value");
  const unsigned top = msb(value);
  if (top < 63) return std::log2(static_cast<double>(value.convert_to<std::uint64_t>()));
  // keep the top 63 bits for the mantissa
  const unsigned drop = top - 62;
  const std::uint64_t head = BigInt(value >> drop).convert_to<std::uint64_t>();
  return std::log2(static_cast<double>(head)) + static_cast<double>(drop);
}

}  // namespace loco
