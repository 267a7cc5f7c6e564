#include "gaugerank/rank_algebra.hpp"

#include <algorithm>

#include "gaugerank/errors.hpp"

namespace gaugerank {

std::int64_t product_rank(std::span<const LieGroupSpec> factors) {
  if (factors.empty())
    throw validation_error(
        "a product group needs at least one factor (shatter m >= 1)");
  std::int64_t sum = 0;
  for (const auto& spec : factors) sum += rank_of(spec);
  return sum;
}

ProductGroup ProductGroup::make(std::vector<LieGroupSpec> factors) {
  const std::int64_t total = product_rank(factors);  // validates
  std::sort(factors.begin(), factors.end(), rank_order_less);
  ProductGroup group;
  group.shatter = static_cast<std::int64_t>(factors.size());
  group.total_rank = total;
  group.factors = std::move(factors);
  return group;
}

std::map<std::int64_t, std::size_t> rank_histogram(
    std::span<const ProductGroup> ensemble) {
  std::map<std::int64_t, std::size_t> hist;
  for (const auto& group : ensemble) ++hist[group.total_rank];
  return hist;
}

}  // namespace gaugerank
