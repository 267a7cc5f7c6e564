// Acceptance suite: one test case per shipped guarantee, each printing a
// PASS/FAIL line. Run via ctest or directly: ./tests/acceptance_tests
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaugerank/factor_search.hpp"
#include "gaugerank/lie_catalog.hpp"
#include "gaugerank/partitions.hpp"
#include "gaugerank/rank_algebra.hpp"
#include "gaugerank/subset_sum.hpp"
#include "test_support.hpp"

#ifndef GAUGERANK_CLI_PATH
#error "GAUGERANK_CLI_PATH must point at the gaugerank binary"
#endif

using namespace gaugerank;
using namespace testsupport;

namespace {

// Prints the verdict when the criterion scope closes; REQUIRE failures
// unwind through it.
struct Criterion {
  std::string name;
  explicit Criterion(std::string n) : name(std::move(n)) {}
  ~Criterion() {
    std::printf("%s  %s\n", std::uncaught_exceptions() ? "FAIL" : "PASS",
                name.c_str());
    std::fflush(stdout);
  }
};

using msec = std::chrono::milliseconds;

struct Stopwatch {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<msec>(std::chrono::steady_clock::now() -
                                            start)
        .count();
  }
};

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(GAUGERANK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

SubsetSumInstance seeded_instance(std::mt19937_64& engine, std::int64_t max_n,
                                  std::int64_t max_value,
                                  std::int64_t max_target) {
  const std::int64_t n = draw(engine, 1, max_n);
  std::vector<std::int64_t> values;
  for (std::int64_t i = 0; i < n; ++i)
    values.push_back(draw(engine, 1, max_value));
  return SubsetSumInstance::make(std::move(values),
                                 draw(engine, 1, max_target));
}

// Independent partition oracles, duplicated here so the acceptance binary
// carries its own cross-checks.
std::int64_t count_partitions_by_recursion(std::int64_t remaining,
                                           std::int64_t min_part) {
  if (remaining == 0) return 1;
  std::int64_t total = 0;
  for (std::int64_t part = min_part; part <= remaining; ++part)
    total += count_partitions_by_recursion(remaining - part, part);
  return total;
}

std::vector<bigint> coin_change_table(std::int64_t n) {
  std::vector<bigint> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (std::int64_t part = 1; part <= n; ++part)
    for (std::int64_t d = part; d <= n; ++d)
      ways[static_cast<std::size_t>(d)] +=
          ways[static_cast<std::size_t>(d - part)];
  return ways;
}

double median(std::vector<double> xs) {
  REQUIRE(!xs.empty());
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

}  // namespace

TEST_CASE("criterion 1: Standard Model reproduction") {
  Criterion verdict("criterion 1: Standard Model rank 4 via product and CLI");
  Stopwatch watch;

  // rank(SU(3) x SU(2) x U(1)) = (3-1) + (2-1) + 1 = 4.
  const std::vector<LieGroupSpec> sm{A(2), A(1), U1()};
  REQUIRE(product_rank(sm) == 4);

  REQUIRE(run_cli("catalog build --max-rank 8 --simply-laced "
                  "--out acceptance_sl.json")
              .exit_code == 0);
  const auto enumerated =
      run_cli("enumerate --catalog acceptance_sl.json --alpha 4");
  REQUIRE(enumerated.exit_code == 0);

  bool sm_found = false;
  std::stringstream ss(enumerated.out);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    const auto f = nlohmann::json::parse(line);
    if (f.at("factors") ==
        nlohmann::json::array({{{"family", "A"}, {"index", 1}},
                               {{"family", "U1"}, {"index", 1}},
                               {{"family", "A"}, {"index", 2}}}))
      sm_found = true;
  }
  REQUIRE(sm_found);
  std::remove("acceptance_sl.json");
  REQUIRE(watch.elapsed_ms() < 1000);
}

TEST_CASE("criterion 2: oracle equivalence over 1000 seeded instances") {
  Criterion verdict(
      "criterion 2: DP feasibility == brute force on 1200 instances, "
      "witnesses verified");
  Stopwatch watch;
  auto engine = rng(0xACCE5501);
  for (int trial = 0; trial < 1200; ++trial) {
    const auto instance = seeded_instance(engine, 14, 50, 200);
    const auto oracle = brute_force_subset_sum(instance);
    const auto dp = decide_subset_sum(instance);
    REQUIRE(dp.feasible == oracle.feasible);
    if (oracle.feasible) {
      REQUIRE(oracle.witness.has_value());
      REQUIRE(dp.witness.has_value());
      REQUIRE(verify_certificate(instance, *oracle.witness));
      REQUIRE(verify_certificate(instance, *dp.witness));
    }
  }
  REQUIRE(watch.elapsed_ms() < 10000);
}

TEST_CASE("criterion 3: FPTAS guarantee, zero violations") {
  Criterion verdict(
      "criterion 3: OPT/(1+eps) <= z <= OPT on 250 instances x eps {0.1,0.4}");
  auto engine = rng(0xACCE5503);
  for (int trial = 0; trial < 250; ++trial) {
    const auto instance = seeded_instance(engine, 16, 100, 400);
    const std::int64_t opt = exact_max_subset_sum(instance);
    for (const double eps : {0.1, 0.4}) {
      const std::int64_t z = approx_max_subset_sum(instance, eps);
      REQUIRE(z <= opt);
      REQUIRE(static_cast<double>(z) * (1.0 + eps) >=
              static_cast<double>(opt));
    }
  }
}

TEST_CASE("criterion 4: partition function cross-validation") {
  Criterion verdict(
      "criterion 4: p(n) == enumeration count (n<=40) and coin-change DP "
      "(n<=500)");
  Stopwatch watch;
  const auto table = PartitionTable::up_to(500);
  for (std::int64_t n = 1; n <= 40; ++n)
    REQUIRE(table.at(n) == count_partitions_by_recursion(n, 1));
  const auto ways = coin_change_table(500);
  for (std::int64_t n = 1; n <= 500; ++n)
    REQUIRE(table.at(n) == ways[static_cast<std::size_t>(n)]);
  REQUIRE(watch.elapsed_ms() < 5000);
}

TEST_CASE("criterion 5: factorization count equals p(alpha) on the tower") {
  Criterion verdict(
      "criterion 5: one-group-per-rank catalog count == p(alpha), alpha<=30");
  for (std::int64_t alpha = 1; alpha <= 30; ++alpha) {
    const auto tower = build_catalog(alpha, {LieFamily::A}, false);
    const auto query = FactorQuery::make(tower, alpha);
    REQUIRE(count_factorizations(query) == partition_exact(alpha));
  }
}

TEST_CASE("criterion 6: exponential bound with equality exactly at 1 and 2") {
  Criterion verdict("criterion 6: p(n) <= 2^(n-1) for n<=64, equality at {1,2}");
  for (std::int64_t n = 1; n <= 64; ++n) {
    const auto check = check_exponential_bound(n);
    REQUIRE(check.partition_count <= check.bound);
    REQUIRE(check.holds_strictly == (n != 1 && n != 2));
  }
}

TEST_CASE("criterion 7: asymptotic convergence and pinned ratios") {
  Criterion verdict(
      "criterion 7: asymptotic/exact > 1, decreasing, within 10% at n=100");
  const auto table = PartitionTable::up_to(500);

  // Regression values computed from the dual-validated exact series and the
  // closed-form asymptotic.
  const std::map<std::int64_t, double> pinned{{50, 1.0654397542261043},
                                              {100, 1.0457135630736354},
                                              {200, 1.0320293062894235},
                                              {500, 1.0200949029231194}};
  double previous = std::numeric_limits<double>::max();
  for (const auto& [n, expected] : pinned) {
    const double ratio =
        partition_asymptotic(n) / table.at(n).convert_to<double>();
    REQUIRE(ratio > 1.0);
    REQUIRE(ratio < previous);
    REQUIRE(std::abs(ratio - expected) <= 1e-9 * expected);
    previous = ratio;
  }
  const double at100 =
      partition_asymptotic(100) / table.at(100).convert_to<double>();
  REQUIRE(std::abs(at100 - 1.0) <= 0.10);
}

TEST_CASE("criterion 8: complexity gap at desk scale") {
  Criterion verdict(
      "criterion 8: brute force >=4x from n=20 to 24; DP within 3x of "
      "linear in t");
  REQUIRE(run_cli("bench --sizes 20,24 --targets 1000,10000,100000 "
                  "--dp-n 18 --trials 7 --seed 20260809 "
                  "--out acceptance_bench.csv")
              .exit_code == 0);

  // algorithm -> (n or t) -> wall times.
  std::map<std::string, std::map<std::int64_t, std::vector<double>>> brute_by_n,
      dp_by_target;
  std::ifstream csv("acceptance_bench.csv");
  REQUIRE(csv.good());
  std::string line;
  std::getline(csv, line);
  REQUIRE(line == "algorithm,n,target,feasible,wall_time_ns");
  while (std::getline(csv, line)) {
    std::stringstream row(line);
    std::string algo, n_str, t_str, feasible, ns_str;
    std::getline(row, algo, ',');
    std::getline(row, n_str, ',');
    std::getline(row, t_str, ',');
    std::getline(row, feasible, ',');
    std::getline(row, ns_str, ',');
    const std::int64_t n = std::stoll(n_str);
    const std::int64_t t = std::stoll(t_str);
    const double ns = static_cast<double>(std::stoll(ns_str));
    if (algo == "brute_force" && (n == 20 || n == 24))
      brute_by_n[algo][n].push_back(ns);
    if (algo == "dp" && n == 18 &&
        (t == 1000 || t == 10000 || t == 100000))
      dp_by_target[algo][t].push_back(ns);
  }
  std::remove("acceptance_bench.csv");

  const double brute20 = median(brute_by_n["brute_force"][20]);
  const double brute24 = median(brute_by_n["brute_force"][24]);
  REQUIRE(brute24 >= 4.0 * brute20);

  // Linear extrapolation anchored at t=1000; 3x headroom.
  const double dp1k = median(dp_by_target["dp"][1000]);
  const double dp10k = median(dp_by_target["dp"][10000]);
  const double dp100k = median(dp_by_target["dp"][100000]);
  REQUIRE(dp10k <= 3.0 * 10.0 * dp1k);
  REQUIRE(dp100k <= 3.0 * 100.0 * dp1k);
}
