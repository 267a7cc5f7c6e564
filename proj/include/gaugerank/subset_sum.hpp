// Subset-sum decision, exact optimization and approximation.
//
// Four algorithms behind one instance type:
//   decide_subset_sum      pseudo-polynomial bitset DP, O(|S|*t) time,
//                          witness reconstructed from a first-setter table
//   brute_force_subset_sum exhaustive 2^n enumeration; the test oracle
//   exact_max_subset_sum   meet-in-the-middle optimization, O(2^(n/2))
//   approx_max_subset_sum  FPTAS by list trimming, delta = eps/(2n)
//
// The decision problem asks for a NONEMPTY index subset summing exactly to
// the target (a gauge group has at least one factor); the optimization form
// admits the empty subset as a 0 floor.

#ifndef GAUGERANK_SUBSET_SUM_HPP_
#define GAUGERANK_SUBSET_SUM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gaugerank {

struct SubsetSumInstance {
  // Multiset S; duplicates allowed and addressed by index.
  std::vector<std::int64_t> values;
  std::int64_t target = 0;

  // Documented implementation bounds. Values and target are capped at 2^62
  // so that sums of two admissible subset sums never overflow int64.
  static constexpr std::size_t kMaxValues = 65536;
  static constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 62;

  // Validating factory: every value >= 1, target >= 1, size and magnitude
  // bounds respected. Throws validation_error otherwise.
  static SubsetSumInstance make(std::vector<std::int64_t> values,
                                std::int64_t target);

  friend bool operator==(const SubsetSumInstance&,
                         const SubsetSumInstance&) = default;
};

void validate_instance(const SubsetSumInstance& instance);

// An NP certificate: strictly increasing, nonempty positions into values.
struct Certificate {
  std::vector<std::size_t> indices;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Decision {
  bool feasible = false;
  std::optional<Certificate> witness;  // engaged iff feasible
};

// Bitset dynamic program over reachable sums 0..t with a first-setter table
// for witness reconstruction (the reconstruction prefers smaller item
// indices at each step, so output is deterministic). Refuses targets whose
// table would exceed 2^32 bits and points at approx_max_subset_sum instead;
// note the first-setter table additionally costs 4 bytes per target unit.
Decision decide_subset_sum(const SubsetSumInstance& instance);

// Exhaustive enumeration of nonempty subsets in lexicographic index order;
// returns the first witness in that order. Guarded at n <= 30
// (resource_error beyond); this is the oracle the DP is tested against.
Decision brute_force_subset_sum(const SubsetSumInstance& instance);

constexpr std::size_t kBruteForceMaxValues = 30;

// Polynomial-time NP verifier: true iff indices are nonempty, strictly
// increasing, in range, and sum exactly to the target. Total - malformed
// certificates yield false, never an error.
bool verify_certificate(const SubsetSumInstance& instance,
                        const Certificate& cert);

// Largest subset sum <= target, empty subset allowed (so >= 0). Feasibility
// of the decision problem is equivalent to the result equalling the target.
// Meet-in-the-middle, guarded at n <= 40.
std::int64_t exact_max_subset_sum(const SubsetSumInstance& instance);

constexpr std::size_t kExactMaxValues = 40;

// Fully polynomial-time approximation scheme: returns z with
// OPT/(1+epsilon) <= z <= OPT, in time polynomial in n, log(target) and
// 1/epsilon. Requires 0 < epsilon < 1 (validation_error otherwise).
std::int64_t approx_max_subset_sum(const SubsetSumInstance& instance,
                                   double epsilon);

}  // namespace gaugerank

#endif  // GAUGERANK_SUBSET_SUM_HPP_
