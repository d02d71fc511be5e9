#pragma once

#include <cstddef>
#include <string_view>

namespace psbck {

// Hard ceiling imposed by the 64-bit subset representation.
inline constexpr std::size_t kMaxCarrier = 64;

// Size caps for certification and the exhaustive searches. The environment
// variable PSBCK_MAX_N, when set to a positive integer, replaces every cap
// (clamped to kMaxCarrier).
struct Limits {
  std::size_t carrier = 24;
  std::size_t operator_enumeration = 10;
  std::size_t subset_enumeration = 20;
  std::size_t endomorphism_enumeration = 8;
  std::size_t smarandache_search = 16;

  static Limits from_environment();
};

// Process-wide limits, read from the environment on first use.
const Limits& limits();

// Throws WorkbenchError(kCarrierTooLarge) when n > cap.
void require_within_cap(std::size_t n, std::size_t cap, std::string_view what);

}  // namespace psbck
