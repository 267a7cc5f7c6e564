#include "gaugerank/subset_sum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "gaugerank/errors.hpp"

namespace gaugerank {

namespace {

// Feasibility table must fit in 2^32 bits; beyond that the DP would thrash
// rather than compute. Callers are pointed at the FPTAS.
constexpr std::int64_t kDpMaxTargetBits = std::int64_t{1} << 32;

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

}  // namespace

void validate_instance(const SubsetSumInstance& instance) {
  if (instance.values.empty())
    throw validation_error("subset-sum instance needs at least one value");
  if (instance.values.size() > SubsetSumInstance::kMaxValues)
    throw validation_error(
        "subset-sum instance has " + std::to_string(instance.values.size()) +
        " values; implementation bound is " +
        std::to_string(SubsetSumInstance::kMaxValues));
  for (std::size_t i = 0; i < instance.values.size(); ++i) {
    const auto v = instance.values[i];
    if (v < 1)
      throw validation_error("values[" + std::to_string(i) +
                             "] must be a positive integer (got " +
                             std::to_string(v) + ")");
    if (v > SubsetSumInstance::kMaxMagnitude)
      throw validation_error("values[" + std::to_string(i) +
                             "] exceeds the 2^62 magnitude bound");
  }
  if (instance.target < 1)
    throw validation_error("target must be a positive integer (got " +
                           std::to_string(instance.target) + ")");
  if (instance.target > SubsetSumInstance::kMaxMagnitude)
    throw validation_error("target exceeds the 2^62 magnitude bound");
}

SubsetSumInstance SubsetSumInstance::make(std::vector<std::int64_t> values,
                                          std::int64_t target) {
  SubsetSumInstance instance{std::move(values), target};
  validate_instance(instance);
  return instance;
}

bool verify_certificate(const SubsetSumInstance& instance,
                        const Certificate& cert) {
  if (cert.indices.empty()) return false;
  std::int64_t sum = 0;
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t idx : cert.indices) {
    if (idx >= instance.values.size()) return false;
    if (!first && idx <= prev) return false;  // distinct and increasing
    prev = idx;
    first = false;
    sum += instance.values[idx];
    if (sum > instance.target) return false;  // values positive; early out
  }
  return sum == instance.target;
}

Decision decide_subset_sum(const SubsetSumInstance& instance) {
  validate_instance(instance);
  const std::int64_t t = instance.target;
  if (t + 1 > kDpMaxTargetBits)
    throw resource_error(
        "target " + std::to_string(t) +
        " exceeds the 2^32-bit DP table bound; use approx_max_subset_sum");

  const std::size_t bits = static_cast<std::size_t>(t) + 1;
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;  // empty subset reaches sum 0
  // first_setter[s] = index of the item whose pass first made s reachable.
  std::vector<std::uint32_t> first_setter(bits, kUnset);

  std::vector<std::uint64_t> shifted(words);
  for (std::size_t i = 0; i < instance.values.size(); ++i) {
    const std::int64_t v = instance.values[i];
    if (v > t) continue;
    // shifted = reach << v, then record bits newly set by item i.
    const std::size_t word_shift = static_cast<std::size_t>(v) / 64;
    const unsigned bit_shift = static_cast<unsigned>(v % 64);
    for (std::size_t w = words; w-- > 0;) {
      std::uint64_t x = 0;
      if (w >= word_shift) {
        x = reach[w - word_shift] << bit_shift;
        if (bit_shift != 0 && w > word_shift)
          x |= reach[w - word_shift - 1] >> (64 - bit_shift);
      }
      shifted[w] = x;
    }
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fresh = shifted[w] & ~reach[w];
      reach[w] |= fresh;
      while (fresh) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        const std::size_t sum = w * 64 + b;
        if (sum < bits) first_setter[sum] = static_cast<std::uint32_t>(i);
      }
    }
  }

  const bool feasible =
      (reach[static_cast<std::size_t>(t) / 64] >> (t % 64)) & 1;
  Decision decision{feasible, std::nullopt};
  if (!feasible) return decision;

  // Walk the first-setter chain back from t. Each step moves to a sum first
  // reached by an earlier item, so indices strictly decrease.
  std::vector<std::size_t> picked;
  std::int64_t remaining = t;
  while (remaining > 0) {
    const std::uint32_t i = first_setter[static_cast<std::size_t>(remaining)];
    picked.push_back(i);
    remaining -= instance.values[i];
  }
  std::reverse(picked.begin(), picked.end());
  decision.witness = Certificate{std::move(picked)};
  return decision;
}

namespace {

// Lexicographic DFS over nonempty index subsets: visiting [..., i] before
// extending it, and extending before trying i+1, yields subsets exactly in
// lexicographic index order. Values are positive, so partial sums over the
// target prune the whole subtree.
bool brute_force_dfs(const SubsetSumInstance& instance, std::size_t start,
                     std::int64_t sum, std::vector<std::size_t>& chosen) {
  for (std::size_t i = start; i < instance.values.size(); ++i) {
    const std::int64_t next = sum + instance.values[i];
    if (next > instance.target) continue;
    chosen.push_back(i);
    if (next == instance.target) return true;
    if (brute_force_dfs(instance, i + 1, next, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Decision brute_force_subset_sum(const SubsetSumInstance& instance) {
  validate_instance(instance);
  if (instance.values.size() > kBruteForceMaxValues)
    throw resource_error("brute force is guarded at " +
                         std::to_string(kBruteForceMaxValues) +
                         " values (got " +
                         std::to_string(instance.values.size()) + ")");
  std::vector<std::size_t> chosen;
  if (brute_force_dfs(instance, 0, 0, chosen))
    return Decision{true, Certificate{std::move(chosen)}};
  return Decision{false, std::nullopt};
}

namespace {

// All subset sums <= target of values[lo, hi), empty subset included.
std::vector<std::int64_t> half_sums(const SubsetSumInstance& instance,
                                    std::size_t lo, std::size_t hi) {
  std::vector<std::int64_t> sums{0};
  for (std::size_t i = lo; i < hi; ++i) {
    const std::size_t n = sums.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t s = sums[k] + instance.values[i];
      if (s <= instance.target) sums.push_back(s);
    }
  }
  return sums;
}

}  // namespace

std::int64_t exact_max_subset_sum(const SubsetSumInstance& instance) {
  validate_instance(instance);
  const std::size_t n = instance.values.size();
  if (n > kExactMaxValues)
    throw resource_error("meet-in-the-middle is guarded at " +
                         std::to_string(kExactMaxValues) + " values (got " +
                         std::to_string(n) + ")");

  const std::size_t mid = n / 2;
  std::vector<std::int64_t> left = half_sums(instance, 0, mid);
  std::vector<std::int64_t> right = half_sums(instance, mid, n);
  std::sort(right.begin(), right.end());

  std::int64_t best = 0;
  for (const std::int64_t a : left) {
    // Largest b with a + b <= target.
    auto it = std::upper_bound(right.begin(), right.end(),
                               instance.target - a);
    const std::int64_t b = *std::prev(it);  // right always holds 0
    best = std::max(best, a + b);
    if (best == instance.target) break;
  }
  return best;
}

std::int64_t approx_max_subset_sum(const SubsetSumInstance& instance,
                                   double epsilon) {
  validate_instance(instance);
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw validation_error("epsilon must lie strictly between 0 and 1 (got " +
                           std::to_string(epsilon) + ")");

  const double n = static_cast<double>(instance.values.size());
  const double delta = epsilon / (2.0 * n);

  // Trimmed list of reachable sums, sorted ascending, starting from the
  // empty sum. After each merge, keep an element only if it exceeds the
  // last kept one by a factor of more than (1 + delta), and drop everything
  // over the target.
  std::vector<std::int64_t> kept{0};
  std::vector<std::int64_t> merged;
  for (const std::int64_t v : instance.values) {
    merged.clear();
    merged.reserve(kept.size() * 2);
    // Merge kept and kept+v (both sorted).
    std::size_t a = 0, b = 0;
    std::int64_t last = -1;
    while (a < kept.size() || b < kept.size()) {
      std::int64_t candidate;
      if (b >= kept.size() ||
          (a < kept.size() && kept[a] <= kept[b] + v)) {
        candidate = kept[a++];
      } else {
        candidate = kept[b++] + v;
      }
      if (candidate > instance.target) break;
      if (candidate == last) continue;
      if (last >= 0 && static_cast<double>(candidate) <=
                           static_cast<double>(last) * (1.0 + delta))
        continue;
      merged.push_back(candidate);
      last = candidate;
    }
    kept.swap(merged);
  }
  return kept.back();
}

}  // namespace gaugerank
