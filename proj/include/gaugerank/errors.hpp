// Error types shared by all gaugerank modules.
//
// validation_error - a domain invariant was violated (bad family/index
//                    combination, empty factor list, epsilon out of range...).
// parse_error      - malformed input file or JSON document.
// resource_error   - a guarded algorithm refused to run (instance too large
//                    for brute force, DP table over the memory bound...).

#ifndef GAUGERANK_ERRORS_HPP_
#define GAUGERANK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gaugerank {

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gaugerank

#endif  // GAUGERANK_ERRORS_HPP_
