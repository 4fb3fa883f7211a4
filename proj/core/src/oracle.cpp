#include "loco/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "loco/balanced.hpp"
#include "loco/cardinality.hpp"
#include "loco/codec.hpp"

namespace loco {

// Independent constraint check: a string contains 0 1^y 0 or 1 0^y 1 with
// y <= x exactly when some strictly interior run of identical bits has
// length <= x. Shares nothing with the codec's pattern scanner.
static bool interior_runs_long_enough(const BitVec& bits, int x) {
  const int n = static_cast<int>(bits.size());
  int run_start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || bits[static_cast<std::size_t>(i)] != bits[static_cast<std::size_t>(run_start)]) {
      const bool interior = run_start > 0 && i < n;
      if (interior && i - run_start <= x) return false;
      run_start = i;
    }
  }
  return true;
}

std::vector<BitVec> enumerate_codebook(int m, int x, int cap) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (x < 1) throw std::invalid_argument("x must be >= 1");
  if (m > cap) throw std::invalid_argument("enumeration length exceeds the cap");
  std::vector<BitVec> book;
  BitVec bits(static_cast<std::size_t>(m), 0);
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t v = 0; v < limit; ++v) {
    for (int i = 0; i < m; ++i) {
      bits[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>((v >> (m - 1 - i)) & 1);
    }
    if (interior_runs_long_enough(bits, x)) book.push_back(bits);
  }
  return book;
}

namespace {

// Prefix classification into the five groups; valid for m >= x + 2.
int group_of(const BitVec& cw, int x) {
  const int m = static_cast<int>(cw.size());
  if (cw[0] == 0) return cw[1] == 0 ? 1 : 2;
  if (cw[1] == 0) return 4;
  int leading_ones = 0;
  while (leading_ones < m && cw[static_cast<std::size_t>(leading_ones)] == 1) ++leading_ones;
  return leading_ones >= x + 2 ? 5 : 3;
}

struct Checker {
  CertifyReport report;

  void expect(bool ok, const std::string& what) {
    if (!ok) report.failures.push_back(what);
  }
};

std::size_t rank_in(const std::vector<BitVec>& book, const BitVec& cw) {
  const auto it = std::lower_bound(book.begin(), book.end(), cw);
  if (it == book.end() || *it != cw) throw std::logic_error("suffix not found in shorter codebook");
  return static_cast<std::size_t>(it - book.begin());
}

}  // namespace

CertifyReport certify_codec(int m, int x, int cap) {
  Checker check;
  const auto book = enumerate_codebook(m, x, cap);
  const CardinalityTable table({m, x});
  const BigInt& total = table.count(m);
  check.expect(BigInt(book.size()) == total, "codebook size differs from N(m, x)");

  if (m >= 2) {
    for (std::size_t g = 0; g < book.size(); ++g) {
      const BitVec& expected = book[g];
      if (codeword_of(BigInt(g), table) != expected) {
        check.expect(false, "codeword_of(" + std::to_string(g) + ") != codebook entry");
        break;
      }
      if (index_of(expected, table) != BigInt(g)) {
        check.expect(false, "index_of does not invert rank " + std::to_string(g));
        break;
      }
      if (book[book.size() - 1 - g] != complement(expected)) {
        check.expect(false, "complement rule fails at rank " + std::to_string(g));
        break;
      }
    }
    check.report.codewords_checked = book.size();
  }

  if (m >= x + 2) {
    std::map<int, BigInt> counted;
    for (const BitVec& cw : book) ++counted[group_of(cw, x)];
    const GroupCardinalities expected = group_cardinalities(table, m);
    check.expect(counted[1] == expected.n1 && counted[2] == expected.n2 &&
                     counted[3] == expected.n3 && counted[4] == expected.n4 &&
                     counted[5] == expected.n5,
                 "group cardinalities differ from prefix classification");
  }

  // Shift check: compare each codeword's rank against the rank of its
  // corresponding shorter codeword (m-1 bits for groups 1-3, m-1-x bits for
  // groups 4-5).
  if (m >= x + 3 && m - 1 - x >= 1) {
    const auto book_short = enumerate_codebook(m - 1, x, cap);
    const auto book_shorter = enumerate_codebook(m - 1 - x, x, cap);
    const IndexShifts shifts = index_shifts(table, m);
    bool shifts_ok = true;
    for (std::size_t g = 0; g < book.size() && shifts_ok; ++g) {
      const BitVec& cw = book[g];
      const int group = group_of(cw, x);
      BigInt expected_shift;
      BigInt shorter_rank;
      if (group <= 3) {
        shorter_rank = rank_in(book_short, BitVec(cw.begin() + 1, cw.end()));
        expected_shift = group == 1 ? shifts.zeta1 : group == 2 ? shifts.zeta2 : shifts.zeta3;
      } else {
        shorter_rank = rank_in(book_shorter, BitVec(cw.begin() + 1 + x, cw.end()));
        expected_shift = group == 4 ? shifts.zeta4 : shifts.zeta5;
      }
      shifts_ok = BigInt(g) - shorter_rank == expected_shift;
    }
    check.expect(shifts_ok, "index shifts differ from corresponding-codeword ranks");
  }

  check.report.pass = check.report.failures.empty();
  return check.report;
}

}  // namespace loco
