// JSON wire formats.
//
// Catalog:       {"max_rank": int, "simply_laced_only": bool,
//                 "families": [string], "entries": [{"family": string,
//                 "index": int|null}]}
//                Family strings: "A","B","C","D","E6","E7","E8","F4","G2","U1".
//                "index" is null exactly for the exceptional families.
// Query:         {"catalog": <catalog>, "target_rank": int,
//                 "max_shatter": int|null, "max_copies_per_group": int|null}
// Instance:      {"values": [int], "target": int}
// Decision:      {"feasible": bool, "witness": [int]|null}   (index witness)
// Factorization: {"factors": [{"family": string, "index": int|null}],
//                 "shatter": int, "rank": int}
//
// Big integers (factorization counts, partition values) are serialized as
// decimal strings; they overflow native JSON numbers.

#ifndef GAUGERANK_JSON_IO_HPP_
#define GAUGERANK_JSON_IO_HPP_

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "gaugerank/factor_search.hpp"
#include "gaugerank/lie_catalog.hpp"
#include "gaugerank/subset_sum.hpp"

namespace gaugerank {

using json = nlohmann::json;

json spec_to_json(const LieGroupSpec& spec);
LieGroupSpec spec_from_json(const json& j);

json catalog_to_json(const GroupCatalog& catalog);
// Throws parse_error on schema mismatch, validation_error when the decoded
// catalog violates a domain invariant.
GroupCatalog catalog_from_json(const json& j);

json query_to_json(const FactorQuery& query);
FactorQuery query_from_json(const json& j);

json instance_to_json(const SubsetSumInstance& instance);
SubsetSumInstance instance_from_json(const json& j);

json decision_to_json(const Decision& decision);

// {"<rank>": count, ...} with decimal-string keys.
json histogram_to_json(const std::map<std::int64_t, std::size_t>& histogram);

// Reads and parses a whole file; parse errors carry the path and the
// parser's line/byte context. Writing creates or truncates the file.
json read_json_file(const std::string& path);
void write_json_file(const json& j, const std::string& path);

}  // namespace gaugerank

#endif  // GAUGERANK_JSON_IO_HPP_
