// Integer partition arithmetic: exact p(n) by Euler's pentagonal-number
// recurrence, partition enumeration, the exp(pi sqrt(2n/3))/(4n sqrt(3))
// asymptotic and the 2^(n-1) bound check.
//
// p(n) exceeds 64-bit range near n = 405, so values are arbitrary-precision
// throughout.

#ifndef GAUGERANK_PARTITIONS_HPP_
#define GAUGERANK_PARTITIONS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gaugerank {

using bigint = boost::multiprecision::cpp_int;

// Memo table for p(0..n). Build or extend once (single writer), then read
// concurrently; at() never mutates.
class PartitionTable {
 public:
  // Table holding p(0..n). p(0) = 1, the empty partition.
  static PartitionTable up_to(std::int64_t n);

  // Extends the table to cover p(0..n); no-op if already covered.
  void extend_to(std::int64_t n);

  // p(n); n must already be covered (std::out_of_range otherwise).
  const bigint& at(std::int64_t n) const;

  std::int64_t max_n() const {
    return static_cast<std::int64_t>(values_.size()) - 1;
  }

 private:
  std::vector<bigint> values_{bigint(1)};  // p(0)
};

// Exact p(n) via a fresh table; pure. Use PartitionTable directly for bulk
// queries. n < 0 is a validation_error.
bigint partition_exact(std::int64_t n);

// Visits every partition of n exactly once as a nondecreasing part list, in
// lexicographic stream order ([1,1,1], [1,2], [3] for n = 3). Return false
// to stop. Guarded at n <= 60 - the stream has p(n) elements.
void partition_enumerate(
    std::int64_t n,
    const std::function<bool(const std::vector<std::int64_t>&)>& visit);

constexpr std::int64_t kPartitionEnumerateMax = 60;

// exp(pi sqrt(2n/3)) / (4 n sqrt(3)) in double precision. When the value
// would overflow, throws resource_error whose message reports the natural
// log of the value (see partition_asymptotic_log).
double partition_asymptotic(std::int64_t n);

// ln of the asymptotic value; always representable for n up to ~10^6.
double partition_asymptotic_log(std::int64_t n);

struct BoundCheck {
  bool holds_strictly = false;  // p(n) < 2^(n-1)
  bigint partition_count;
  bigint bound;  // 2^(n-1)
};

// p(n) versus 2^(n-1). Equality holds at n = 1 and n = 2; the bound is
// strict for every larger n.
BoundCheck check_exponential_bound(std::int64_t n);

}  // namespace gaugerank

#endif  // GAUGERANK_PARTITIONS_HPP_
