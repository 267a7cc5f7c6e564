#include "gaugerank/partitions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gaugerank/errors.hpp"

namespace gaugerank {

PartitionTable PartitionTable::up_to(std::int64_t n) {
  PartitionTable table;
  table.extend_to(n);
  return table;
}

void PartitionTable::extend_to(std::int64_t n) {
  if (n < 0)
    throw validation_error("partition table bound must be >= 0 (got " +
                           std::to_string(n) + ")");
  // Euler: p(m) = sum_{k>=1} (-1)^(k+1) [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
  for (std::int64_t m = max_n() + 1; m <= n; ++m) {
    bigint acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t pent1 = k * (3 * k - 1) / 2;
      if (pent1 > m) break;
      const std::int64_t pent2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += values_[static_cast<std::size_t>(m - pent1)];
        if (pent2 <= m) acc += values_[static_cast<std::size_t>(m - pent2)];
      } else {
        acc -= values_[static_cast<std::size_t>(m - pent1)];
        if (pent2 <= m) acc -= values_[static_cast<std::size_t>(m - pent2)];
      }
    }
    values_.push_back(acc);
  }
}

const bigint& PartitionTable::at(std::int64_t n) const {
  if (n < 0 || n > max_n())
    throw std::out_of_range("partition table covers 0.." +
                            std::to_string(max_n()) + "; asked for " +
                            std::to_string(n));
  return values_[static_cast<std::size_t>(n)];
}

bigint partition_exact(std::int64_t n) {
  if (n < 0)
    throw validation_error("p(n) requires n >= 0 (got " + std::to_string(n) +
                           ")");
  return PartitionTable::up_to(n).at(n);
}

namespace {

bool enumerate_parts(
    std::int64_t min_part, std::int64_t remaining,
    std::vector<std::int64_t>& parts,
    const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  if (remaining == 0) return visit(parts);
  for (std::int64_t part = min_part; part <= remaining; ++part) {
    parts.push_back(part);
    const bool keep_going = enumerate_parts(part, remaining - part, parts, visit);
    parts.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void partition_enumerate(
    std::int64_t n,
    const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  if (n < 1)
    throw validation_error("partition enumeration requires n >= 1 (got " +
                           std::to_string(n) + ")");
  if (n > kPartitionEnumerateMax)
    throw resource_error("partition enumeration is guarded at n <= " +
                         std::to_string(kPartitionEnumerateMax) +
                         " (stream length is p(n)); got " + std::to_string(n));
  std::vector<std::int64_t> parts;
  enumerate_parts(1, n, parts, visit);
}

double partition_asymptotic_log(std::int64_t n) {
  if (n < 1)
    throw validation_error("asymptotic form requires n >= 1 (got " +
                           std::to_string(n) + ")");
  const double x = static_cast<double>(n);
  const double pi = 3.14159265358979323846;
  return pi * std::sqrt(2.0 * x / 3.0) -
         std::log(4.0 * x * std::sqrt(3.0));
}

double partition_asymptotic(std::int64_t n) {
  const double log_value = partition_asymptotic_log(n);
  if (log_value >= std::log(std::numeric_limits<double>::max()))
    throw resource_error(
        "asymptotic value overflows double precision at n = " +
        std::to_string(n) +
        "; ln(value) = " + std::to_string(log_value));
  return std::exp(log_value);
}

BoundCheck check_exponential_bound(std::int64_t n) {
  if (n < 1)
    throw validation_error("bound check requires n >= 1 (got " +
                           std::to_string(n) + ")");
  BoundCheck check;
  check.partition_count = partition_exact(n);
  check.bound = bigint(1) << (n - 1);
  check.holds_strictly = check.partition_count < check.bound;
  return check;
}

}  // namespace gaugerank
