#pragma once

#include <cstddef>

namespace cgt {

/// Runtime knobs, initialized once from the environment:
///   PCLOSE_ORACLE_BOUND        subgroup-enumeration oracle bound (default 2000)
///   PCLOSE_QUOTIENT_DEGREE_CAP max cosets for quotient representations (default 20000)
struct Config {
  std::size_t oracle_bound = 2000;
  int quotient_degree_cap = 20000;
};

const Config& config();

}  // namespace cgt
