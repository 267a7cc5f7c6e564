// Benchmark harness: seeded, reproducible subset-sum instances timed across
// the four solver algorithms. Instance generation is deterministic in the
// seed; wall times are environment noise and never part of the contract.
//
// Two axes:
//   size axis    n sweeps over `sizes`; values are even and large, the
//                target is odd near half the total, so instances are
//                parity-infeasible and brute force sees its worst case.
//   target axis  t sweeps over `targets` at fixed n = dp_n; values are
//                uniform in [1, max(4, t/4)], so the DP table width tracks t.

#ifndef GAUGERANK_BENCH_HPP_
#define GAUGERANK_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gaugerank/subset_sum.hpp"

namespace gaugerank {

enum class BenchAlgorithm { brute_force, dp, meet_in_middle, fptas };

const char* bench_algorithm_name(BenchAlgorithm algorithm);

struct BenchRecord {
  BenchAlgorithm algorithm = BenchAlgorithm::dp;
  std::int64_t instance_size = 0;
  std::int64_t target = 0;
  bool feasible = false;
  std::int64_t wall_time_ns = 0;
};

struct BenchConfig {
  std::vector<std::int64_t> sizes{20, 24};
  std::vector<std::int64_t> targets{1000, 10000, 100000, 1000000};
  std::int64_t target_axis_size = 18;
  std::int64_t trials = 5;
  std::uint64_t seed = 1;
  double epsilon = 0.1;
};

// Instance generators, exposed so the determinism contract is testable
// without timing anything. Both use a private stream derived from
// (seed, axis, parameter, trial); platform-stable (no std distributions).
SubsetSumInstance bench_size_axis_instance(const BenchConfig& config,
                                           std::int64_t n, std::int64_t trial);
SubsetSumInstance bench_target_axis_instance(const BenchConfig& config,
                                             std::int64_t target,
                                             std::int64_t trial);

// Runs every algorithm whose guard admits the instance, in a fixed order;
// one record per (algorithm, instance) run.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

// Header "algorithm,n,target,feasible,wall_time_ns", one row per record.
// Throws parse_error when the path is unwritable.
void write_bench_csv(const std::vector<BenchRecord>& records,
                     const std::string& path);

}  // namespace gaugerank

#endif  // GAUGERANK_BENCH_HPP_
