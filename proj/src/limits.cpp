#include "psbck/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "psbck/error.hpp"

namespace psbck {

Limits Limits::from_environment() {
  Limits result;
  const char* raw = std::getenv("PSBCK_MAX_N");
  if (raw == nullptr || *raw == '\0') return result;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0) return result;
  const auto cap = std::min<std::size_t>(static_cast<std::size_t>(value), kMaxCarrier);
  result.carrier = cap;
  result.operator_enumeration = cap;
  result.subset_enumeration = cap;
  result.endomorphism_enumeration = cap;
  result.smarandache_search = cap;
  return result;
}

const Limits& limits() {
  static const Limits instance = Limits::from_environment();
  return instance;
}

void require_within_cap(std::size_t n, std::size_t cap, std::string_view what) {
  if (n > cap) {
    throw WorkbenchError(ErrorCode::kCarrierTooLarge,
                         std::string(what) + ": carrier has " + std::to_string(n) +
                             " elements, cap is " + std::to_string(cap) +
                             " (override with PSBCK_MAX_N)");
  }
}

}  // namespace psbck
