#pragma once

#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "sweepspace/predicates.hpp"
#include "sweepspace/tape.hpp"

namespace sweepspace {

struct PairResult {
  uint32_t i = 0, j = 0;   // input indices, i < j
  uint64_t dist2 = 0;      // exact squared distance

  friend bool operator==(const PairResult&, const PairResult&) = default;
};

// True when a beats b under the global tie rule: smaller distance, then
// lexicographically smallest (i, j).
inline bool pair_less(const PairResult& a, const PairResult& b) {
  return std::tie(a.dist2, a.i, a.j) < std::tie(b.dist2, b.i, b.j);
}

struct CrossRecord {
  uint32_t i, j;  // i < j
  CrossKind kind;

  friend auto operator<=>(const CrossRecord&, const CrossRecord&) = default;
};

// Brute-force references. Budget-exempt by construction: none of them takes a
// BitBudget. Each shares only the exact predicates with the algorithms it
// checks.

// All-pairs minimum squared distance, (dist2, i, j)-lexicographic tie-break.
PairResult bf_closest(const InputTape& tape);

// Every intersecting unordered pair once, with its kind. For axis-parallel
// tapes the policy is perpendicular pairs only (a segment with x1 == x2
// counts as vertical, including degenerate points; parallel touches are not
// intersections in the H-V crossing model).
std::vector<CrossRecord> bf_intersections(const InputTape& tape);

// Exact union area by coordinate compression and grid fill.
int64_t bf_measure(const InputTape& tape);

// Intersection point of an axis-parallel crossing pair (vertical x, horizontal y).
std::pair<Coord, Coord> axis_crossing_point(Seg a, Seg b);

inline bool is_vertical(const Seg& s) { return s.x1 == s.x2; }

}  // namespace sweepspace
