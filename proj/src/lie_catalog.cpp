#include "gaugerank/lie_catalog.hpp"

#include <algorithm>
#include <array>

#include "gaugerank/errors.hpp"
#include "gaugerank/json_io.hpp"

namespace gaugerank {

namespace {

constexpr std::array<const char*, kNumFamilies> kFamilyNames = {
    "A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2", "U1"};

// Rank of the exceptional families; indexed families take rank = index.
std::int64_t fixed_rank(LieFamily f) {
  switch (f) {
    case LieFamily::E6: return 6;
    case LieFamily::E7: return 7;
    case LieFamily::E8: return 8;
    case LieFamily::F4: return 4;
    case LieFamily::G2: return 2;
    default: return 0;  // unreachable for valid calls
  }
}

std::int64_t min_index(LieFamily f) {
  // D1 and D2 are degenerate (D2 = A1 x A1) and excluded.
  return f == LieFamily::D ? 3 : 1;
}

}  // namespace

const std::vector<LieFamily>& all_families() {
  static const std::vector<LieFamily> fams = [] {
    std::vector<LieFamily> v;
    for (int i = 0; i < kNumFamilies; ++i) v.push_back(static_cast<LieFamily>(i));
    return v;
  }();
  return fams;
}

const char* family_name(LieFamily f) {
  return kFamilyNames[static_cast<int>(f)];
}

LieFamily family_from_name(const std::string& name) {
  for (int i = 0; i < kNumFamilies; ++i)
    if (name == kFamilyNames[i]) return static_cast<LieFamily>(i);
  throw parse_error("unknown Lie family name: \"" + name + "\"");
}

void validate_spec(const LieGroupSpec& spec) {
  if (family_is_indexed(spec.family)) {
    if (!spec.index)
      throw validation_error(std::string(family_name(spec.family)) +
                             "-family spec requires an index");
    if (spec.family == LieFamily::U1 && *spec.index != 1)
      throw validation_error("U1 index must be 1 (got " +
                             std::to_string(*spec.index) +
                             "); higher tori are repeated U1 factors");
    if (*spec.index < min_index(spec.family))
      throw validation_error(std::string(family_name(spec.family)) +
                             "-family index must be >= " +
                             std::to_string(min_index(spec.family)) + " (got " +
                             std::to_string(*spec.index) + ")");
  } else if (spec.index) {
    throw validation_error(std::string("exceptional family ") +
                           family_name(spec.family) +
                           " does not take an index");
  }
}

LieGroupSpec LieGroupSpec::make(LieFamily family,
                                std::optional<std::int64_t> index) {
  LieGroupSpec spec{family, index};
  validate_spec(spec);
  return spec;
}

std::int64_t rank_of(const LieGroupSpec& spec) {
  validate_spec(spec);
  if (family_is_indexed(spec.family)) return *spec.index;  // U1 index is 1
  return fixed_rank(spec.family);
}

bool simply_laced(const LieGroupSpec& spec) {
  switch (spec.family) {
    case LieFamily::A:
    case LieFamily::D:
    case LieFamily::E6:
    case LieFamily::E7:
    case LieFamily::E8:
    case LieFamily::U1:
      return true;
    default:
      return false;
  }
}

std::string label(const LieGroupSpec& spec) {
  std::string s = family_name(spec.family);
  if (spec.index && spec.family != LieFamily::U1)
    s += std::to_string(*spec.index);
  return s;
}

bool rank_order_less(const LieGroupSpec& a, const LieGroupSpec& b) {
  const auto ra = rank_of(a), rb = rank_of(b);
  if (ra != rb) return ra < rb;
  return a < b;  // (family, index)
}

GroupCatalog build_catalog(std::int64_t max_rank,
                           const std::vector<LieFamily>& families_allowed,
                           bool simply_laced_only) {
  if (max_rank < 1)
    throw validation_error("catalog max_rank must be >= 1 (got " +
                           std::to_string(max_rank) + ")");

  std::vector<LieFamily> fams = families_allowed;
  std::sort(fams.begin(), fams.end());
  fams.erase(std::unique(fams.begin(), fams.end()), fams.end());

  GroupCatalog cat;
  cat.max_rank = max_rank;
  cat.families_allowed = fams;
  cat.simply_laced_only = simply_laced_only;

  for (LieFamily f : fams) {
    // Simply-lacedness depends only on the family.
    if (simply_laced_only && !simply_laced(LieGroupSpec{f, std::nullopt}))
      continue;
    if (family_is_indexed(f)) {
      const std::int64_t hi = (f == LieFamily::U1) ? 1 : max_rank;
      for (std::int64_t i = min_index(f); i <= hi; ++i)
        cat.entries.push_back(LieGroupSpec{f, i});
    } else if (fixed_rank(f) <= max_rank) {
      cat.entries.push_back(LieGroupSpec{f, std::nullopt});
    }
  }
  // Families iterate in enum order and indices ascend, so entries are
  // already sorted by (family, index).
  return cat;
}

std::vector<LieGroupSpec> groups_of_rank(const GroupCatalog& catalog,
                                         std::int64_t r) {
  std::vector<LieGroupSpec> out;
  for (const auto& spec : catalog.entries)
    if (rank_of(spec) == r) out.push_back(spec);
  return out;
}

void save_catalog(const GroupCatalog& catalog, const std::string& path) {
  write_json_file(catalog_to_json(catalog), path);
}

GroupCatalog load_catalog(const std::string& path) {
  return catalog_from_json(read_json_file(path));
}

}  // namespace gaugerank
