#include "gaugerank/factor_search.hpp"

#include <algorithm>
#include <string>

#include "gaugerank/errors.hpp"

namespace gaugerank {

void validate_query(const FactorQuery& query) {
  if (query.target_rank < 1)
    throw validation_error("target rank must be >= 1 (got " +
                           std::to_string(query.target_rank) + ")");
  if (query.max_shatter && *query.max_shatter < 1)
    throw validation_error("max_shatter must be >= 1 when present");
  if (query.max_copies_per_group && *query.max_copies_per_group < 1)
    throw validation_error("max_copies_per_group must be >= 1 when present");
  for (const auto& spec : query.catalog.entries) validate_spec(spec);
}

FactorQuery FactorQuery::make(GroupCatalog catalog, std::int64_t target_rank,
                              std::optional<std::int64_t> max_shatter,
                              std::optional<std::int64_t> max_copies) {
  FactorQuery query{std::move(catalog), target_rank, max_shatter, max_copies};
  validate_query(query);
  return query;
}

namespace {

// Copies of one group that could ever appear in a factorization.
std::int64_t copy_cap(const FactorQuery& query, std::int64_t rank) {
  std::int64_t cap = query.target_rank / rank;
  if (query.max_copies_per_group) cap = std::min(cap, *query.max_copies_per_group);
  if (query.max_shatter) cap = std::min(cap, *query.max_shatter);
  return cap;
}

// Catalog entries that fit under the target, as (spec, rank, cap) rows in
// canonical (rank, family, index) order.
struct Candidate {
  LieGroupSpec spec;
  std::int64_t rank;
  std::int64_t cap;
};

std::vector<Candidate> admitted_candidates(const FactorQuery& query) {
  std::vector<Candidate> cands;
  for (const auto& spec : query.catalog.entries) {
    const std::int64_t r = rank_of(spec);
    if (r > query.target_rank) continue;
    cands.push_back({spec, r, copy_cap(query, r)});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) {
              return rank_order_less(a.spec, b.spec);
            });
  return cands;
}

}  // namespace

SubsetSumInstance ReducedInstance::to_instance() const {
  if (values.empty())
    throw validation_error(
        "reduced instance has no slots; query is infeasible by construction");
  return SubsetSumInstance::make(values, target);
}

std::vector<LieGroupSpec> ReducedInstance::factors_for(
    const Certificate& cert) const {
  std::vector<LieGroupSpec> factors;
  factors.reserve(cert.indices.size());
  for (std::size_t idx : cert.indices) factors.push_back(slot_groups.at(idx));
  return factors;
}

ReducedInstance to_subset_sum(const FactorQuery& query) {
  validate_query(query);
  ReducedInstance reduced;
  reduced.target = query.target_rank;
  // Catalog order, copies consecutive, so slot layout is deterministic.
  for (const auto& spec : query.catalog.entries) {
    const std::int64_t r = rank_of(spec);
    if (r > query.target_rank) continue;
    for (std::int64_t c = 0; c < copy_cap(query, r); ++c) {
      reduced.values.push_back(r);
      reduced.slot_groups.push_back(spec);
    }
  }
  return reduced;
}

namespace {

struct EnumerationState {
  const std::vector<Candidate>& cands;
  const std::function<bool(const Factorization&)>& visit;
  std::optional<std::int64_t> max_shatter;
  std::vector<LieGroupSpec> stack;
  std::vector<std::int64_t> used;  // copies taken per candidate

  // Candidates ascend in (rank, family, index), so trying them in order at
  // every position emits factor sequences in lexicographic order.
  bool descend(std::size_t from, std::int64_t remaining) {
    if (remaining == 0) {
      Factorization f;
      f.factors = stack;
      f.shatter = static_cast<std::int64_t>(stack.size());
      f.total_rank = product_rank(f.factors);
      return visit(f);
    }
    if (max_shatter &&
        static_cast<std::int64_t>(stack.size()) >= *max_shatter)
      return true;
    for (std::size_t j = from; j < cands.size(); ++j) {
      const auto& cand = cands[j];
      if (cand.rank > remaining) break;  // sorted by rank
      if (used[j] == cand.cap) continue;
      ++used[j];
      stack.push_back(cand.spec);
      const bool keep_going = descend(j, remaining - cand.rank);
      stack.pop_back();
      --used[j];
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

void enumerate_factorizations(
    const FactorQuery& query,
    const std::function<bool(const Factorization&)>& visit) {
  validate_query(query);
  const std::vector<Candidate> cands = admitted_candidates(query);
  EnumerationState state{cands, visit, query.max_shatter, {}, {}};
  state.used.assign(cands.size(), 0);
  state.stack.reserve(static_cast<std::size_t>(query.target_rank));
  state.descend(0, query.target_rank);
}

std::vector<Factorization> collect_factorizations(const FactorQuery& query,
                                                  std::size_t limit) {
  std::vector<Factorization> out;
  if (limit == 0) return out;
  enumerate_factorizations(query, [&](const Factorization& f) {
    out.push_back(f);
    return out.size() < limit;
  });
  return out;
}

namespace {

// dp[d][m] = number of factor multisets of total rank d with m factors,
// over candidates processed so far. The shatter axis is capped at alpha
// (every factor has rank >= 1) or at the query bound.
std::vector<std::vector<bigint>> shatter_dp(const FactorQuery& query) {
  const std::int64_t alpha = query.target_rank;
  const std::int64_t m_max =
      query.max_shatter ? std::min(*query.max_shatter, alpha) : alpha;

  std::vector<std::vector<bigint>> dp(
      static_cast<std::size_t>(alpha) + 1,
      std::vector<bigint>(static_cast<std::size_t>(m_max) + 1));
  dp[0][0] = 1;

  for (const auto& cand : admitted_candidates(query)) {
    // In-place convolution with (1 + x^r y + x^2r y^2 + ... + x^cr y^c);
    // descending sweep keeps copy counts capped.
    for (std::int64_t d = alpha; d >= cand.rank; --d) {
      for (std::int64_t m = m_max; m >= 1; --m) {
        bigint acc = 0;
        for (std::int64_t k = 1; k <= cand.cap; ++k) {
          const std::int64_t dd = d - k * cand.rank;
          const std::int64_t mm = m - k;
          if (dd < 0 || mm < 0) break;
          acc += dp[static_cast<std::size_t>(dd)][static_cast<std::size_t>(mm)];
        }
        dp[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)] += acc;
      }
    }
  }
  return dp;
}

}  // namespace

namespace {

// Coefficients of prod_g (1 + x^r + ... + x^(c r)) up to degree alpha.
// Each factor is applied as multiplication by (1 - x^((c+1) r)) followed by
// division by (1 - x^r), both linear sweeps.
std::vector<bigint> count_dp(const FactorQuery& query) {
  const std::int64_t alpha = query.target_rank;
  std::vector<bigint> dp(static_cast<std::size_t>(alpha) + 1);
  dp[0] = 1;
  for (const auto& cand : admitted_candidates(query)) {
    const std::int64_t kill = (cand.cap + 1) * cand.rank;
    for (std::int64_t d = alpha; d >= kill; --d)
      dp[static_cast<std::size_t>(d)] -=
          dp[static_cast<std::size_t>(d - kill)];
    for (std::int64_t d = cand.rank; d <= alpha; ++d)
      dp[static_cast<std::size_t>(d)] +=
          dp[static_cast<std::size_t>(d - cand.rank)];
  }
  return dp;
}

}  // namespace

bigint count_factorizations(const FactorQuery& query) {
  validate_query(query);
  if (query.max_shatter) {
    // The shatter axis cannot be folded into a one-variable product.
    const auto dp = shatter_dp(query);
    bigint total = 0;
    const auto& row = dp[static_cast<std::size_t>(query.target_rank)];
    for (std::size_t m = 1; m < row.size(); ++m) total += row[m];
    return total;
  }
  // The empty multiset sits at degree 0 and alpha >= 1, so the coefficient
  // counts exactly the nonempty factorizations.
  return count_dp(query)[static_cast<std::size_t>(query.target_rank)];
}

std::map<std::int64_t, bigint> shatter_distribution(const FactorQuery& query) {
  validate_query(query);
  const auto dp = shatter_dp(query);
  std::map<std::int64_t, bigint> dist;
  const auto& row = dp[static_cast<std::size_t>(query.target_rank)];
  for (std::size_t m = 1; m < row.size(); ++m)
    if (row[m] != 0) dist[static_cast<std::int64_t>(m)] = row[m];
  return dist;
}

}  // namespace gaugerank
