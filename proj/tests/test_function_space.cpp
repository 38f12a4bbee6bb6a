#include <cmath>
#include <set>

#include "doctest.h"
#include "gdeutsch/errors.hpp"
#include "gdeutsch/function_space.hpp"
#include "gdeutsch/rng.hpp"

using namespace gdeutsch;

TEST_SUITE("function_space") {

TEST_CASE("make_constant") {
  const auto f1 = make_constant(2, 2, 0);
  CHECK(f1.values()[0] == 0);
  CHECK(f1.values()[1] == 0);

  const auto single = make_constant(1, 1, 0);
  CHECK(single.n_domain() == 1);
  CHECK(is_constant(single));

  const auto ones = make_constant(3, 2, 1);
  CHECK(to_literal(ones) == "1,1,1");
  CHECK(row_profile(ones).counts == std::vector<std::uint32_t>{1, 0, 0, 1});

  CHECK_THROWS_AS(make_constant(3, 2, 2), InvalidArgument);
}

TEST_CASE("construction rejects out-of-range values") {
  CHECK_THROWS_AS(FunctionSpec(2, {0, 2}), InvalidArgument);
  CHECK_THROWS_AS(FunctionSpec(0, {0}), InvalidArgument);
  CHECK_THROWS_AS(FunctionSpec(2, {}), InvalidArgument);
}

TEST_CASE("row_sums") {
  CHECK(row_sums(FunctionSpec(2, {0, 0, 0})) == std::vector<std::uint32_t>{3, 0});
  CHECK(row_sums(FunctionSpec(2, {0, 1, 0})) == std::vector<std::uint32_t>{2, 1});
  CHECK(row_sums(FunctionSpec(3, {0, 1, 2})) == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("row_profile") {
  CHECK(row_profile(FunctionSpec(2, {0, 0, 0})).counts == std::vector<std::uint32_t>{1, 0, 0, 1});
  CHECK(row_profile(FunctionSpec(2, {0, 1, 0})).counts == std::vector<std::uint32_t>{0, 1, 1, 0});

  // A permutation puts one 1 in each row.
  const FunctionSpec perm(5, {3, 0, 4, 1, 2});
  const auto p = row_profile(perm);
  CHECK(p.counts[1] == 5);
  CHECK(p.counts[0] + p.counts[2] + p.counts[3] + p.counts[4] + p.counts[5] == 0);
}

TEST_CASE("is_constant") {
  CHECK(is_constant(FunctionSpec(2, {0, 0, 0})));
  CHECK_FALSE(is_constant(FunctionSpec(2, {0, 1, 0})));
  CHECK(is_constant(FunctionSpec(7, {5})));
}

TEST_CASE("enumerate_all yields every function once in lexicographic order") {
  std::vector<std::string> seen;
  for (const auto& f : enumerate_all(2, 2)) seen.push_back(to_literal(f));
  CHECK(seen == std::vector<std::string>{"0,0", "0,1", "1,0", "1,1"});

  std::size_t count = 0;
  for (const auto& f : enumerate_all(3, 2)) {
    (void)f;
    ++count;
  }
  CHECK(count == 8);

  std::set<std::string> distinct;
  for (const auto& f : enumerate_all(1, 3)) distinct.insert(to_literal(f));
  CHECK(distinct.size() == 3);
}

TEST_CASE("enumerate_all respects the cap") {
  CHECK_THROWS_AS(enumerate_all(24, 24), ResourceLimit);
  CHECK_THROWS_AS(enumerate_all(10, 2, 1000), ResourceLimit);
  CHECK(enumerate_all(10, 2, 1024).size() == 1024);
}

TEST_CASE("rank round trip matches enumeration order") {
  std::uint64_t rank = 0;
  for (const auto& f : enumerate_all(4, 3)) {
    CHECK(function_rank(f) == rank);
    CHECK(function_at(rank, 4, 3) == f);
    ++rank;
  }
}

TEST_CASE("profile invariants hold over a full enumeration") {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      std::uint32_t constants = 0;
      for (const auto& f : enumerate_all(n, m)) {
        const auto sums = row_sums(f);
        std::uint32_t total = 0;
        for (auto s : sums) total += s;
        CHECK(total == n);
        CHECK(is_valid_profile(row_profile(f), n, m));
        CHECK(profile_square_sum(row_profile(f)) == square_sum(sums));
        constants += is_constant(f) ? 1 : 0;
      }
      CHECK(constants == m);
    }
  }
}

TEST_CASE("sample_uniform is uniform over the four two-point functions") {
  auto rng = substream(7, 0);
  std::array<int, 4> hits{};
  constexpr int kDraws = 100'000;
  for (int i = 0; i < kDraws; ++i) ++hits[function_rank(sample_uniform(2, 2, rng))];
  const double sigma = std::sqrt(kDraws * 0.25 * 0.75);
  for (int h : hits) CHECK(std::abs(h - kDraws * 0.25) < 3 * sigma);

  int constants = 0;
  for (int i = 0; i < kDraws; ++i) constants += is_constant(sample_uniform(3, 2, rng)) ? 1 : 0;
  CHECK(std::abs(constants - kDraws * 0.25) < 3 * sigma);

  CHECK(sample_uniform(1, 1, rng) == make_constant(1, 1, 0));
}

TEST_CASE("function literal parsing") {
  const auto f = parse_function_literal("0,1,0", 2);
  CHECK(f.n_domain() == 3);
  CHECK(f.m_range() == 2);
  CHECK(to_literal(f) == "0,1,0");
  CHECK_THROWS_AS(parse_function_literal("0,2", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_function_literal("0,,1", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_function_literal("0,1,", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_function_literal("-1", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_function_literal("0, 1", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_function_literal("", 2), InvalidArgument);
}

TEST_CASE("canonical profile order") {
  const RowProfile full{{1, 0, 1}};
  const RowProfile spread{{0, 2, 0}};
  CHECK(canonical_before(full, spread));
  CHECK_FALSE(canonical_before(spread, full));
  CHECK_FALSE(canonical_before(full, full));
}

}
