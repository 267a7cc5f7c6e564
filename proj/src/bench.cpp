#include "gaugerank/bench.hpp"

#include <chrono>
#include <fstream>
#include <random>

#include "gaugerank/errors.hpp"

namespace gaugerank {

const char* bench_algorithm_name(BenchAlgorithm algorithm) {
  switch (algorithm) {
    case BenchAlgorithm::brute_force: return "brute_force";
    case BenchAlgorithm::dp: return "dp";
    case BenchAlgorithm::meet_in_middle: return "meet_in_middle";
    case BenchAlgorithm::fptas: return "fptas";
  }
  return "unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Full-width mixing of (seed, axis, parameter, trial) into one engine seed;
// std::seed_seq would truncate the inputs to 32 bits.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t axis,
                            std::uint64_t parameter, std::uint64_t trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ axis);
  h = splitmix64(h ^ parameter);
  h = splitmix64(h ^ trial);
  return std::mt19937_64(h);
}

// Engine output reduced by modulo; keeps the generated columns stable
// across standard library implementations.
std::int64_t draw(std::mt19937_64& engine, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(engine() % span);
}

}  // namespace

SubsetSumInstance bench_size_axis_instance(const BenchConfig& config,
                                           std::int64_t n,
                                           std::int64_t trial) {
  auto engine = make_engine(config.seed, 1, static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(trial));
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(n));
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    // Even values in [2^20, 2^21).
    const std::int64_t v = 2 * draw(engine, 1 << 19, (1 << 20) - 1);
    values.push_back(v);
    total += v;
  }
  // Odd target near half the total: parity-infeasible, weak pruning.
  const std::int64_t target = (total / 2) | 1;
  return SubsetSumInstance::make(std::move(values), target);
}

SubsetSumInstance bench_target_axis_instance(const BenchConfig& config,
                                             std::int64_t target,
                                             std::int64_t trial) {
  auto engine = make_engine(config.seed, 2, static_cast<std::uint64_t>(target),
                            static_cast<std::uint64_t>(trial));
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(config.target_axis_size));
  const std::int64_t hi = std::max<std::int64_t>(4, target / 4);
  for (std::int64_t i = 0; i < config.target_axis_size; ++i)
    values.push_back(draw(engine, 1, hi));
  return SubsetSumInstance::make(std::move(values), target);
}

namespace {

using clock = std::chrono::steady_clock;

template <typename Run>
BenchRecord time_run(BenchAlgorithm algorithm,
                     const SubsetSumInstance& instance, Run&& run) {
  BenchRecord record;
  record.algorithm = algorithm;
  record.instance_size = static_cast<std::int64_t>(instance.values.size());
  record.target = instance.target;
  const auto start = clock::now();
  record.feasible = run();
  record.wall_time_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start)
          .count();
  return record;
}

void bench_instance(const BenchConfig& config,
                    const SubsetSumInstance& instance,
                    std::vector<BenchRecord>& records) {
  if (instance.values.size() <= kBruteForceMaxValues)
    records.push_back(time_run(BenchAlgorithm::brute_force, instance, [&] {
      return brute_force_subset_sum(instance).feasible;
    }));
  records.push_back(time_run(BenchAlgorithm::dp, instance, [&] {
    return decide_subset_sum(instance).feasible;
  }));
  if (instance.values.size() <= kExactMaxValues)
    records.push_back(time_run(BenchAlgorithm::meet_in_middle, instance, [&] {
      return exact_max_subset_sum(instance) == instance.target;
    }));
  records.push_back(time_run(BenchAlgorithm::fptas, instance, [&] {
    // z == target certifies feasibility; z < target is inconclusive and
    // recorded as the algorithm's answer.
    return approx_max_subset_sum(instance, config.epsilon) == instance.target;
  }));
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (const std::int64_t n : config.sizes)
    for (std::int64_t trial = 0; trial < config.trials; ++trial)
      bench_instance(config, bench_size_axis_instance(config, n, trial),
                     records);
  for (const std::int64_t t : config.targets)
    for (std::int64_t trial = 0; trial < config.trials; ++trial)
      bench_instance(config, bench_target_axis_instance(config, t, trial),
                     records);
  return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot open \"" + path + "\" for writing");
  out << "algorithm,n,target,feasible,wall_time_ns\n";
  for (const auto& r : records) {
    out << bench_algorithm_name(r.algorithm) << ',' << r.instance_size << ','
        << r.target << ',' << (r.feasible ? "true" : "false") << ','
        << r.wall_time_ns << '\n';
  }
  if (!out)
    throw parse_error("failed writing \"" + path + "\"");
}

}  // namespace gaugerank
