// Factor-group search: which multisets of catalog groups have ranks summing
// to a target alpha?
//
// The bridge to subset-sum expands the catalog into (group, copy) slots -
// a group of rank r gets floor(alpha/r) slots when its copies are unbounded,
// since more can never be used - and asks for a subset of slot ranks summing
// to alpha. Enumeration walks factor multisets directly in canonical order;
// counting evaluates the colored-partition generating function
// prod_g (1 + x^r(g) + x^(2 r(g)) + ...) truncated at degree alpha, so it
// never materializes the stream.

#ifndef GAUGERANK_FACTOR_SEARCH_HPP_
#define GAUGERANK_FACTOR_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gaugerank/lie_catalog.hpp"
#include "gaugerank/rank_algebra.hpp"
#include "gaugerank/subset_sum.hpp"

namespace gaugerank {

using bigint = boost::multiprecision::cpp_int;

struct FactorQuery {
  GroupCatalog catalog;
  std::int64_t target_rank = 0;  // alpha >= 1
  std::optional<std::int64_t> max_shatter;
  std::optional<std::int64_t> max_copies_per_group;

  static FactorQuery make(GroupCatalog catalog, std::int64_t target_rank,
                          std::optional<std::int64_t> max_shatter = {},
                          std::optional<std::int64_t> max_copies_per_group = {});
};

void validate_query(const FactorQuery& query);

// A factorization is a product group whose total rank equals the query
// target and whose factors are drawn from the query catalog.
using Factorization = ProductGroup;

// Result of the catalog -> subset-sum reduction. One slot per admitted
// (group, copy) pair, in catalog order with copies consecutive; values[i]
// is the rank of slot_groups[i]. No admitted slots (every group outranks
// the target) marks the query infeasible by construction.
struct ReducedInstance {
  std::vector<std::int64_t> values;
  std::vector<LieGroupSpec> slot_groups;
  std::int64_t target = 0;

  bool infeasible_by_construction() const { return values.empty(); }

  // Throws validation_error when there are no slots; check
  // infeasible_by_construction() first.
  SubsetSumInstance to_instance() const;

  // Maps an index witness back to the factor groups it selects.
  std::vector<LieGroupSpec> factors_for(const Certificate& cert) const;
};

// Slot expansion. Copies per group are capped by floor(alpha/rank), the
// per-group copy bound and the shatter bound, all semantically lossless.
// Feasibility of the instance is equivalent to existence of a factorization
// for shatter-unbounded queries; a shatter bound can make the instance
// feasible while no admissible factorization exists (plain subset-sum
// cannot express a cardinality cap), so with max_shatter the instance is a
// relaxation: infeasible instance still implies no factorization.
ReducedInstance to_subset_sum(const FactorQuery& query);

// Visits every multiset-distinct factorization exactly once, in
// lexicographic order on the canonical factor sequence (recursive descent
// over nondecreasing ranks). Return false from the visitor to stop early.
void enumerate_factorizations(
    const FactorQuery& query,
    const std::function<bool(const Factorization&)>& visit);

// Convenience: first `limit` factorizations, materialized.
std::vector<Factorization> collect_factorizations(
    const FactorQuery& query, std::size_t limit = SIZE_MAX);

// Number of factorizations, by generating-function DP - no enumeration.
bigint count_factorizations(const FactorQuery& query);

// Factorization counts keyed by shatter m; values sum to
// count_factorizations. Empty map when the query is infeasible.
std::map<std::int64_t, bigint> shatter_distribution(const FactorQuery& query);

}  // namespace gaugerank

#endif  // GAUGERANK_FACTOR_SEARCH_HPP_
