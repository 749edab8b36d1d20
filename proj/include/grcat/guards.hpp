#pragma once

// Size limits for the exponential routines. Overridable through the
// GRCAT_SIZE_GUARD environment variable, e.g.
//   GRCAT_SIZE_GUARD="an_max=7,window_max=128"

#include <cstddef>
#include <string_view>

namespace grcat {

struct SizeGuards {
  int an_max = 6;
  std::size_t bruteforce_max = 20;
  int window_max = 64;
  std::size_t universe_max = 1'000'000;

  /// Throws std::invalid_argument on unknown keys or malformed values.
  static SizeGuards parse(std::string_view text);
  /// Defaults, overridden by GRCAT_SIZE_GUARD when set.
  static SizeGuards from_env();
};

}  // namespace grcat
