#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncinv {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  /// Drives the randomly drawn corpus members (quaternion symbols, forms).
  std::uint64_t seed = 1;
  /// Feeds a deliberately non-associative table into the corpus.
  bool corrupt = false;
};

std::vector<PropertyResult> selftest(const SelftestOptions& opts = {});

}  // namespace ncinv
