// Rank additivity over product groups.
//
// rank(G1 x ... x Gm) = rank(G1) + ... + rank(Gm); a ProductGroup stores
// its factors in canonical order and carries the factor count (the
// "shatter" m) plus the total rank, both fixed at construction.

#ifndef GAUGERANK_RANK_ALGEBRA_HPP_
#define GAUGERANK_RANK_ALGEBRA_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gaugerank/lie_catalog.hpp"

namespace gaugerank {

struct ProductGroup {
  // Canonical order: nondecreasing rank, ties broken by (family, index).
  std::vector<LieGroupSpec> factors;
  std::int64_t shatter = 0;     // = factors.size() >= 1
  std::int64_t total_rank = 0;  // = sum of factor ranks

  // Sorts the factors canonically and derives shatter and total_rank.
  // Throws validation_error on an empty factor list or an invalid factor.
  static ProductGroup make(std::vector<LieGroupSpec> factors);

  friend bool operator==(const ProductGroup&, const ProductGroup&) = default;
};

// Sum of factor ranks; permutation-invariant in the input. A gauge group
// has at least one factor, so an empty list is a validation_error.
std::int64_t product_rank(std::span<const LieGroupSpec> factors);

// Histogram of total ranks over an ensemble; counts sum to ensemble size.
// The rank function is not injective, so distinct products may share a key.
std::map<std::int64_t, std::size_t> rank_histogram(
    std::span<const ProductGroup> ensemble);

}  // namespace gaugerank

#endif  // GAUGERANK_RANK_ALGEBRA_HPP_
