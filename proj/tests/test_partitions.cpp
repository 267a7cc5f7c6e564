#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "gaugerank/errors.hpp"
#include "gaugerank/partitions.hpp"

using namespace gaugerank;

namespace {

// Oracle 1: coin-change DP with parts 1..n. Independent of the pentagonal
// recurrence.
std::vector<bigint> coin_change_table(std::int64_t n) {
  std::vector<bigint> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (std::int64_t part = 1; part <= n; ++part)
    for (std::int64_t d = part; d <= n; ++d)
      ways[static_cast<std::size_t>(d)] +=
          ways[static_cast<std::size_t>(d - part)];
  return ways;
}

// Oracle 2: plain recursive enumeration count, nondecreasing parts.
std::int64_t count_by_recursion(std::int64_t remaining, std::int64_t min_part) {
  if (remaining == 0) return 1;
  std::int64_t total = 0;
  for (std::int64_t part = min_part; part <= remaining; ++part)
    total += count_by_recursion(remaining - part, part);
  return total;
}

}  // namespace

TEST_CASE("small values and the empty-partition convention") {
  CHECK(partition_exact(0) == 1);
  CHECK(partition_exact(1) == 1);
  CHECK(partition_exact(2) == 2);
  CHECK(partition_exact(3) == 3);
  // 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
  CHECK(partition_exact(4) == 5);
  CHECK(count_by_recursion(4, 1) == 5);
  CHECK_THROWS_AS(partition_exact(-1), validation_error);
}

TEST_CASE("pentagonal recurrence agrees with brute-force enumeration") {
  for (std::int64_t n = 1; n <= 40; ++n)
    CHECK(partition_exact(n) == count_by_recursion(n, 1));
}

TEST_CASE("pentagonal recurrence agrees with the coin-change DP up to 500") {
  const auto ways = coin_change_table(500);
  const auto table = PartitionTable::up_to(500);
  for (std::int64_t n = 0; n <= 500; ++n)
    CHECK(table.at(n) == ways[static_cast<std::size_t>(n)]);
}

TEST_CASE("known landmark values") {
  CHECK(partition_exact(100) == bigint("190569292"));
  CHECK(partition_exact(200) == bigint("3972999029388"));
  // p(n) outgrows signed 64-bit integers at n = 406.
  CHECK(partition_exact(405) == bigint("9147679068859117602"));
  CHECK(partition_exact(406) == bigint("9725512513742021729"));
  CHECK(partition_exact(406) > bigint(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("table extension is incremental and reads are stable") {
  PartitionTable table = PartitionTable::up_to(10);
  CHECK(table.max_n() == 10);
  const bigint p10 = table.at(10);
  table.extend_to(50);
  CHECK(table.at(10) == p10);
  CHECK(table.at(50) == partition_exact(50));
  table.extend_to(20);  // no-op
  CHECK(table.max_n() == 50);
  CHECK_THROWS_AS(table.at(51), std::out_of_range);
  CHECK_THROWS_AS(table.at(-1), std::out_of_range);
}

TEST_CASE("p is nondecreasing, strictly increasing from 2 on") {
  const auto table = PartitionTable::up_to(200);
  for (std::int64_t n = 1; n <= 200; ++n)
    CHECK(table.at(n) >= table.at(n - 1));
  for (std::int64_t n = 3; n <= 200; ++n)
    CHECK(table.at(n) > table.at(n - 1));
}

TEST_CASE("enumeration: partitions of 3 in lexicographic order") {
  std::vector<std::vector<std::int64_t>> seen;
  partition_enumerate(3, [&](const std::vector<std::int64_t>& parts) {
    seen.push_back(parts);
    return true;
  });
  REQUIRE(seen.size() == 3);
  CHECK(seen[0] == std::vector<std::int64_t>{1, 1, 1});
  CHECK(seen[1] == std::vector<std::int64_t>{1, 2});
  CHECK(seen[2] == std::vector<std::int64_t>{3});
}

TEST_CASE("enumeration: n = 1 and stream length consistency") {
  std::size_t count = 0;
  partition_enumerate(1, [&](const std::vector<std::int64_t>& parts) {
    ++count;
    CHECK(parts == std::vector<std::int64_t>{1});
    return true;
  });
  CHECK(count == 1);

  for (std::int64_t n : {7, 10, 22}) {
    std::size_t streamed = 0;
    std::int64_t part_sum_check = 0;
    partition_enumerate(n, [&](const std::vector<std::int64_t>& parts) {
      ++streamed;
      std::int64_t sum = 0;
      for (std::int64_t p : parts) sum += p;
      part_sum_check += (sum == n) ? 0 : 1;
      CHECK(std::is_sorted(parts.begin(), parts.end()));
      return true;
    });
    CHECK(part_sum_check == 0);
    CHECK(partition_exact(n) == streamed);
  }
}

TEST_CASE("enumeration guard and early stop") {
  CHECK_THROWS_AS(partition_enumerate(61, [](const auto&) { return true; }),
                  resource_error);
  CHECK_THROWS_AS(partition_enumerate(0, [](const auto&) { return true; }),
                  validation_error);
  std::size_t visited = 0;
  partition_enumerate(20, [&](const auto&) { return ++visited < 5; });
  CHECK(visited == 5);
}

TEST_CASE("asymptotic formula value at n = 1") {
  // exp(pi sqrt(2/3)) / (4 sqrt(3)), evaluated independently here.
  const double pi = std::acos(-1.0);
  const double direct = std::exp(pi * std::sqrt(2.0 / 3.0)) / (4.0 * std::sqrt(3.0));
  CHECK(partition_asymptotic(1) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(partition_asymptotic(1) == doctest::Approx(1.87679).epsilon(1e-4));
}

TEST_CASE("asymptotic ratio exceeds 1 and decreases toward it") {
  const auto table = PartitionTable::up_to(500);
  double previous = 1e300;
  for (std::int64_t n : {50, 100, 200, 500}) {
    const double ratio =
        partition_asymptotic(n) / table.at(n).convert_to<double>();
    CHECK(ratio > 1.0);
    CHECK(ratio < previous);
    previous = ratio;
  }
  // Within 10% at n = 100.
  const double ratio100 =
      partition_asymptotic(100) / table.at(100).convert_to<double>();
  CHECK(std::abs(ratio100 - 1.0) <= 0.10);
}

TEST_CASE("asymptotic overflow guard reports the log value") {
  CHECK_THROWS_WITH_AS(partition_asymptotic(1000000),
                       doctest::Contains("ln(value)"), resource_error);
  // The log form itself stays finite.
  CHECK(partition_asymptotic_log(1000000) ==
        doctest::Approx(std::acos(-1.0) * std::sqrt(2.0e6 / 3.0) -
                        std::log(4.0e6 * std::sqrt(3.0))));
  CHECK_THROWS_AS(partition_asymptotic(0), validation_error);
}

TEST_CASE("exponential bound: p(n) <= 2^(n-1) with equality at 1 and 2") {
  // p(3) = 3 by enumeration: 1+1+1, 1+2, 3.
  const auto at3 = check_exponential_bound(3);
  CHECK(at3.holds_strictly);
  CHECK(at3.partition_count == 3);
  CHECK(at3.bound == 4);

  const auto at1 = check_exponential_bound(1);
  CHECK_FALSE(at1.holds_strictly);
  CHECK(at1.partition_count == at1.bound);
  CHECK(at1.bound == 1);

  const auto at2 = check_exponential_bound(2);
  CHECK_FALSE(at2.holds_strictly);
  CHECK(at2.partition_count == 2);
  CHECK(at2.bound == 2);

  for (std::int64_t n = 1; n <= 64; ++n) {
    const auto check = check_exponential_bound(n);
    CHECK(check.partition_count <= check.bound);
    CHECK(check.holds_strictly == (n >= 3));
  }
}
