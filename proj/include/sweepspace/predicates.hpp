#pragma once

#include <cstdint>
#include <optional>

#include "sweepspace/tape.hpp"

namespace sweepspace {

using int128 = __int128;

// Exact squared Euclidean distance. Max value is 2^63 (corner to corner of
// the coordinate grid), which is why the result is unsigned.
inline uint64_t dist2(Pt a, Pt b) {
  const int64_t dx = int64_t(a.x) - b.x;
  const int64_t dy = int64_t(a.y) - b.y;
  return uint64_t(dx * dx) + uint64_t(dy * dy);
}

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
inline int orientation(Pt a, Pt b, Pt c) {
  const int128 v = int128(int64_t(b.x) - a.x) * (int64_t(c.y) - a.y) -
                   int128(int64_t(b.y) - a.y) * (int64_t(c.x) - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

enum class CrossKind { proper, touch, overlap };

const char* cross_kind_name(CrossKind k);

// Exact intersection classifier for two closed segments. Symmetric in its
// arguments. Returns nullopt when the segments share no point; otherwise:
//   proper  - a single common point interior to both segments
//   touch   - a single common point that is an endpoint of at least one
//   overlap - collinear segments sharing more than one point
std::optional<CrossKind> pair_intersects(Seg a, Seg b);

}  // namespace sweepspace
