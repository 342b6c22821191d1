#pragma once

#include <cstdint>
#include <vector>

#include "sweepspace/budget.hpp"
#include "sweepspace/oracle.hpp"
#include "sweepspace/tape.hpp"

namespace sweepspace {

struct RunStats {
  uint64_t peak_bits = 0;
  uint64_t capacity_bits = 0;
};

// Planar closest pair under an s-bit workspace. Dispatches to the two-pass
// strip algorithm when s >= sqrt(n) * lg n and to the stretched variant
// (batches of r = s^2 / lg^2 s) below that.
PairResult closest_pair(const InputTape& tape, uint64_t s, RunStats* stats = nullptr);

namespace detail {

// Test instrumentation filled by closest_direct.
struct ClosestDebug {
  std::vector<int64_t> separators;       // vertical separator x values
  uint64_t delta_pass1 = ~uint64_t(0);   // dist2 after the vertical pass
  std::vector<uint32_t> candidates;      // global ids, ascending (y, id)
  uint64_t group_size = 0;               // horizontal strip capacity (8m)
};

PairResult closest_direct(const TapeView& view, uint64_t s, BitBudget& budget,
                          ClosestDebug* dbg = nullptr);
PairResult closest_stretched(const InputTape& tape, uint64_t s, BitBudget& budget);

// Classic divide-and-conquer over an id buffer (local view indices).
PairResult incore_closest(const TapeView& view, std::vector<uint32_t> ids,
                          BitBudget& budget);

}  // namespace detail
}  // namespace sweepspace
