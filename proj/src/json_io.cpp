#include "gaugerank/json_io.hpp"

#include <fstream>

#include "gaugerank/errors.hpp"

namespace gaugerank {

namespace {

// Wraps nlohmann access so schema mismatches surface as parse_error with
// the offending field named.
const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t require_int(const json& j, const char* key) {
  const json& field = require_field(j, key);
  if (!field.is_number_integer())
    throw parse_error(std::string("field \"") + key +
                      "\" must be an integer");
  return field.get<std::int64_t>();
}

bool require_bool(const json& j, const char* key) {
  const json& field = require_field(j, key);
  if (!field.is_boolean())
    throw parse_error(std::string("field \"") + key + "\" must be a boolean");
  return field.get<bool>();
}

}  // namespace

json spec_to_json(const LieGroupSpec& spec) {
  json j;
  j["family"] = family_name(spec.family);
  if (spec.index)
    j["index"] = *spec.index;
  else
    j["index"] = nullptr;
  return j;
}

LieGroupSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("group spec must be a JSON object");
  const json& family_field = require_field(j, "family");
  if (!family_field.is_string())
    throw parse_error("field \"family\" must be a string");
  const LieFamily family = family_from_name(family_field.get<std::string>());

  std::optional<std::int64_t> index;
  const json& index_field = require_field(j, "index");
  if (index_field.is_number_integer())
    index = index_field.get<std::int64_t>();
  else if (!index_field.is_null())
    throw parse_error("field \"index\" must be an integer or null");

  return LieGroupSpec::make(family, index);  // validates
}

json catalog_to_json(const GroupCatalog& catalog) {
  json j;
  j["max_rank"] = catalog.max_rank;
  j["simply_laced_only"] = catalog.simply_laced_only;
  json families = json::array();
  for (LieFamily f : catalog.families_allowed) families.push_back(family_name(f));
  j["families"] = families;
  json entries = json::array();
  for (const auto& spec : catalog.entries) entries.push_back(spec_to_json(spec));
  j["entries"] = entries;
  return j;
}

GroupCatalog catalog_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("catalog must be a JSON object");
  GroupCatalog catalog;
  catalog.max_rank = require_int(j, "max_rank");
  catalog.simply_laced_only = require_bool(j, "simply_laced_only");

  const json& families = require_field(j, "families");
  if (!families.is_array())
    throw parse_error("field \"families\" must be an array");
  for (const json& f : families) {
    if (!f.is_string())
      throw parse_error("family names must be strings");
    catalog.families_allowed.push_back(family_from_name(f.get<std::string>()));
  }

  const json& entries = require_field(j, "entries");
  if (!entries.is_array())
    throw parse_error("field \"entries\" must be an array");
  for (const json& e : entries) catalog.entries.push_back(spec_from_json(e));

  // Loaded catalogs obey the same invariants as built ones.
  if (catalog.max_rank < 1)
    throw validation_error("catalog max_rank must be >= 1");
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const auto& spec = catalog.entries[i];
    if (rank_of(spec) > catalog.max_rank)
      throw validation_error("entry " + label(spec) + " outranks max_rank " +
                             std::to_string(catalog.max_rank));
    if (catalog.simply_laced_only && !simply_laced(spec))
      throw validation_error("entry " + label(spec) +
                             " is not simply laced in a simply-laced catalog");
    for (std::size_t k = i + 1; k < catalog.entries.size(); ++k)
      if (catalog.entries[k] == spec)
        throw validation_error("duplicate catalog entry " + label(spec));
  }
  return catalog;
}

namespace {

std::optional<std::int64_t> optional_int(const json& j, const char* key) {
  const json& field = require_field(j, key);
  if (field.is_null()) return std::nullopt;
  if (!field.is_number_integer())
    throw parse_error(std::string("field \"") + key +
                      "\" must be an integer or null");
  return field.get<std::int64_t>();
}

}  // namespace

json query_to_json(const FactorQuery& query) {
  json j;
  j["catalog"] = catalog_to_json(query.catalog);
  j["target_rank"] = query.target_rank;
  j["max_shatter"] =
      query.max_shatter ? json(*query.max_shatter) : json(nullptr);
  j["max_copies_per_group"] = query.max_copies_per_group
                                  ? json(*query.max_copies_per_group)
                                  : json(nullptr);
  return j;
}

FactorQuery query_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("query must be a JSON object");
  return FactorQuery::make(catalog_from_json(require_field(j, "catalog")),
                           require_int(j, "target_rank"),
                           optional_int(j, "max_shatter"),
                           optional_int(j, "max_copies_per_group"));
}

json instance_to_json(const SubsetSumInstance& instance) {
  json j;
  j["values"] = instance.values;
  j["target"] = instance.target;
  return j;
}

SubsetSumInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("instance must be a JSON object");
  const json& values = require_field(j, "values");
  if (!values.is_array())
    throw parse_error("field \"values\" must be an array of integers");
  std::vector<std::int64_t> vals;
  vals.reserve(values.size());
  for (const json& v : values) {
    if (!v.is_number_integer())
      throw parse_error("field \"values\" must contain only integers");
    vals.push_back(v.get<std::int64_t>());
  }
  return SubsetSumInstance::make(std::move(vals), require_int(j, "target"));
}

json decision_to_json(const Decision& decision) {
  json j;
  j["feasible"] = decision.feasible;
  if (decision.witness)
    j["witness"] = decision.witness->indices;
  else
    j["witness"] = nullptr;
  return j;
}

json histogram_to_json(const std::map<std::int64_t, std::size_t>& histogram) {
  json j = json::object();
  for (const auto& [rank, count] : histogram)
    j[std::to_string(rank)] = count;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open \"" + path + "\" for reading");
  try {
    // Exceptions from the parser carry byte/line context.
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error("malformed JSON in \"" + path + "\": " + e.what());
  }
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot open \"" + path + "\" for writing");
  out << j.dump(2) << '\n';
  if (!out)
    throw parse_error("failed writing \"" + path + "\"");
}

}  // namespace gaugerank
