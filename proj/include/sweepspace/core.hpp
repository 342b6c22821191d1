#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sweepspace {

// Signed grid coordinate. The loader enforces |value| <= 2^30 so that squared
// distances and union areas stay inside 64-bit arithmetic.
using Coord = int32_t;

inline constexpr Coord kCoordLimit = 1 << 30;

// Raised for malformed input, violated preconditions, out-of-range arguments.
// The CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an allocation would exceed the workspace cap. This signals a
// violated per-algorithm space constant, not a user error. CLI exit code 4.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised by select() when the requested ordinal does not exist.
struct NotFound : std::runtime_error {
  explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

// lg x = max(1, ceil(log2 x)); the concrete integer reading used by every
// workspace formula in this library.
inline uint64_t ceil_lg(uint64_t x) {
  if (x <= 2) return 1;
  return static_cast<uint64_t>(std::bit_width(x - 1));
}

// Bits of one model word for a (sub)problem of the given size. Workspace is
// metered in these units: storing nu scalars for a size-nu problem costs
// nu * lg nu bits, matching the "linear number of words" convention.
inline uint64_t word_bits(uint64_t problem_size) { return ceil_lg(problem_size); }

}  // namespace sweepspace
