// Cartan classification rank data and catalogs of candidate factor groups.
//
// A LieGroupSpec names one compact connected Lie group at the level of its
// Cartan family and index; the only datum we ever read off it is the rank.
// Isogenous groups (SU(n), PSU(n), ...) collapse to one A-family entry.
// A GroupCatalog is a finite, immutable, deterministically ordered list of
// admissible factor groups, optionally restricted to simply-laced families.

#ifndef GAUGERANK_LIE_CATALOG_HPP_
#define GAUGERANK_LIE_CATALOG_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gaugerank {

// Order matters: catalogs are sorted by (family, index) and serialized
// family names follow this order.
enum class LieFamily : int { A, B, C, D, E6, E7, E8, F4, G2, U1 };

constexpr int kNumFamilies = 10;

// All ten families, in enum order.
const std::vector<LieFamily>& all_families();

const char* family_name(LieFamily f);
// Throws parse_error on an unknown name.
LieFamily family_from_name(const std::string& name);

// True for the indexed families A, B, C, D and the U1 torus; false for the
// five exceptional groups, whose rank is fixed by the family label.
constexpr bool family_is_indexed(LieFamily f) {
  return f == LieFamily::A || f == LieFamily::B || f == LieFamily::C ||
         f == LieFamily::D || f == LieFamily::U1;
}

struct LieGroupSpec {
  LieFamily family = LieFamily::A;
  // Engaged exactly for indexed families. U1 always carries index 1; a torus
  // of rank k is written as k repeated U1 factors, never as one entry.
  std::optional<std::int64_t> index;

  // Validating factory; throws validation_error naming the violated
  // invariant (D-family index < 3, index on an exceptional family, ...).
  static LieGroupSpec make(LieFamily family,
                           std::optional<std::int64_t> index = std::nullopt);

  friend auto operator<=>(const LieGroupSpec&, const LieGroupSpec&) = default;
};

// Throws validation_error if the spec violates the family/index invariants.
void validate_spec(const LieGroupSpec& spec);

// Cartan rank: A_n, B_n, C_n, D_n -> n; E6/E7/E8 -> 6/7/8; F4 -> 4;
// G2 -> 2; U1 -> 1. Pure and total on valid specs.
std::int64_t rank_of(const LieGroupSpec& spec);

// A, D, E6, E7, E8 and the torus are simply laced; B, C, F4, G2 are not.
bool simply_laced(const LieGroupSpec& spec);

// Compact label such as "A2", "D4", "E8", "U1".
std::string label(const LieGroupSpec& spec);

// Orders specs by (rank, family, index); this is the canonical factor order
// used by product groups and enumeration streams.
bool rank_order_less(const LieGroupSpec& a, const LieGroupSpec& b);

struct GroupCatalog {
  std::vector<LieGroupSpec> entries;  // unique, sorted by (family, index)
  std::int64_t max_rank = 0;
  std::vector<LieFamily> families_allowed;  // sorted, unique
  bool simply_laced_only = false;

  friend bool operator==(const GroupCatalog&, const GroupCatalog&) = default;
};

// Materializes every valid spec with rank <= max_rank in the allowed
// families, dropping non-simply-laced entries when requested. Entries come
// out in (family, index) order, so output is reproducible byte for byte.
// Throws validation_error when max_rank < 1.
GroupCatalog build_catalog(std::int64_t max_rank,
                           const std::vector<LieFamily>& families_allowed,
                           bool simply_laced_only);

// All entries of rank exactly r, in catalog order. Empty when none.
std::vector<LieGroupSpec> groups_of_rank(const GroupCatalog& catalog,
                                         std::int64_t r);

// JSON (de)serialization; schema documented in json_io.hpp. load_catalog
// throws parse_error on malformed files and validation_error when the
// decoded catalog breaks an invariant.
void save_catalog(const GroupCatalog& catalog, const std::string& path);
GroupCatalog load_catalog(const std::string& path);

}  // namespace gaugerank

#endif  // GAUGERANK_LIE_CATALOG_HPP_
