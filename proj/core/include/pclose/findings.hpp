#pragma once

#include <string>
#include <vector>

namespace cgt {

/// A reproducible theorem-violation (or planted-control) record: which claim
/// failed, on which instance, with a concrete witness.
struct Finding {
  std::string claim;
  std::string instance;
  std::string witness;
};

using FindingSink = std::vector<Finding>;

}  // namespace cgt
