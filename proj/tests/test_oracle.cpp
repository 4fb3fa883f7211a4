#include <doctest.h>

#include "loco/cardinality.hpp"
#include "loco/codec.hpp"
#include "loco/oracle.hpp"

using namespace loco;

TEST_CASE("enumeration reproduces the length-4, x=1 code") {
  const char* expected[] = {"0000", "0001", "0011", "0110", "0111",
                            "1000", "1001", "1100", "1110", "1111"};
  const auto book = enumerate_codebook(4, 1);
  REQUIRE(book.size() == 10);
  for (std::size_t g = 0; g < book.size(); ++g) {
    CHECK(to_string(book[g]) == expected[g]);
  }
}

TEST_CASE("enumerated sizes match the cardinality recursion") {
  for (int x = 1; x <= 3; ++x) {
    const CardinalityTable t({12, x});
    for (int m = 1; m <= 12; ++m) {
      CHECK(BigInt(enumerate_codebook(m, x).size()) == t.count(m));
    }
  }
}

TEST_CASE("enumeration guards its arguments") {
  CHECK_THROWS_AS(enumerate_codebook(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_codebook(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_codebook(25, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_codebook(12, 1, 10), std::invalid_argument);
}

TEST_CASE("codec certification passes on small codes") {
  for (int x = 1; x <= 3; ++x) {
    for (int m = 2; m <= 10; ++m) {
      const CertifyReport report = certify_codec(m, x);
      INFO("m=", m, " x=", x);
      for (const auto& f : report.failures) INFO(f);
      CHECK(report.pass);
      CHECK(BigInt(report.codewords_checked) ==
            CardinalityTable({m, x}).count(m));
    }
  }
}
