// Shared helpers for the test binaries: spec shorthands and seeded RNG.

#ifndef GAUGERANK_TEST_SUPPORT_HPP_
#define GAUGERANK_TEST_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "gaugerank/lie_catalog.hpp"

namespace testsupport {

inline gaugerank::LieGroupSpec A(std::int64_t n) {
  return gaugerank::LieGroupSpec::make(gaugerank::LieFamily::A, n);
}
inline gaugerank::LieGroupSpec B(std::int64_t n) {
  return gaugerank::LieGroupSpec::make(gaugerank::LieFamily::B, n);
}
inline gaugerank::LieGroupSpec C(std::int64_t n) {
  return gaugerank::LieGroupSpec::make(gaugerank::LieFamily::C, n);
}
inline gaugerank::LieGroupSpec D(std::int64_t n) {
  return gaugerank::LieGroupSpec::make(gaugerank::LieFamily::D, n);
}
inline gaugerank::LieGroupSpec U1() {
  return gaugerank::LieGroupSpec::make(gaugerank::LieFamily::U1, 1);
}
inline gaugerank::LieGroupSpec exceptional(gaugerank::LieFamily f) {
  return gaugerank::LieGroupSpec::make(f);
}

// Deterministic engine per test site.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t draw(std::mt19937_64& engine, std::int64_t lo,
                         std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  engine() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace testsupport

#endif  // GAUGERANK_TEST_SUPPORT_HPP_
