#include <algorithm>

#include "doctest.h"
#include "gdeutsch/combinatorics.hpp"
#include "gdeutsch/errors.hpp"
#include "oracles.hpp"

using namespace gdeutsch;

TEST_SUITE("combinatorics") {

TEST_CASE("enumerate_profiles small cases") {
  const auto two = enumerate_profiles(2, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].counts == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(two[1].counts == std::vector<std::uint32_t>{0, 2, 0});

  const auto three = enumerate_profiles(3, 2);
  REQUIRE(three.size() == 2);
  CHECK(three[0].counts == std::vector<std::uint32_t>{1, 0, 0, 1});
  CHECK(three[1].counts == std::vector<std::uint32_t>{0, 1, 1, 0});

  CHECK(enumerate_profiles(24, 24).size() == 1575);
  CHECK(oracle::partitions_at_most(24, 24) == 1575);
}

TEST_CASE("enumerate_profiles matches a brute-force tuple scan") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
      auto generated = enumerate_profiles(n, m);
      auto scanned = oracle::scan_profiles(n, m);
      CHECK(std::is_sorted(generated.begin(), generated.end(), canonical_before));
      std::sort(generated.begin(), generated.end());
      std::sort(scanned.begin(), scanned.end());
      CHECK(generated == scanned);
    }
  }
}

TEST_CASE("profile count equals partitions into at most M parts") {
  for (std::uint32_t n = 1; n <= 30; ++n) {
    for (std::uint32_t m = 1; m <= 30; ++m) {
      CHECK(enumerate_profiles(n, m).size() == oracle::partitions_at_most(n, m));
    }
  }
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(RowProfile{{1, 0, 1}}, 2, 2) == 2);
  CHECK(multiplicity(RowProfile{{0, 2, 0}}, 2, 2) == 2);
  CHECK(multiplicity(RowProfile{{1, 0, 0, 1}}, 3, 2) == 2);
  CHECK(multiplicity(RowProfile{{0, 1, 1, 0}}, 3, 2) == 6);
  CHECK_THROWS_AS(multiplicity(RowProfile{{0, 1, 1}}, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(multiplicity(RowProfile{{1, 0, 1}}, 2, 3), InvalidArgument);
}

TEST_CASE("check_total") {
  CHECK(check_total(8, 2));
  CHECK(check_total(3, 2));
  CHECK(check_total(24, 24));
  BigInt total = 0;
  for (const auto& pm : profile_multiplicities(24, 24)) {
    CHECK(pm.count >= 1);
    total += pm.count;
  }
  CHECK(total == big_pow(24, 24));
  CHECK(to_string(total) == "1333735776850284124449081472843776");
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(factorial(300) == factorial(299) * 300);
}

}
