#include "sweepspace/predicates.hpp"

#include <algorithm>

namespace sweepspace {

const char* cross_kind_name(CrossKind k) {
  switch (k) {
    case CrossKind::proper: return "proper";
    case CrossKind::touch: return "touch";
    case CrossKind::overlap: return "overlap";
  }
  return "?";
}

namespace {

bool on_segment(Pt p, Pt a, Pt b) {
  // Assumes p collinear with ab; checks bounding-box containment.
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

std::optional<CrossKind> pair_intersects(Seg a, Seg b) {
  const Pt a1{a.x1, a.y1}, a2{a.x2, a.y2}, b1{b.x1, b.y1}, b2{b.x2, b.y2};
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // All on one line (covers degenerate point segments). Order along the
    // dominant axis and intersect the 1-D intervals.
    const bool by_x = !(a.x1 == a.x2 && b.x1 == b.x2);
    auto key = [&](Pt p) { return by_x ? p.x : p.y; };
    const Coord alo = std::min(key(a1), key(a2)), ahi = std::max(key(a1), key(a2));
    const Coord blo = std::min(key(b1), key(b2)), bhi = std::max(key(b1), key(b2));
    const Coord lo = std::max(alo, blo), hi = std::min(ahi, bhi);
    if (lo > hi) return std::nullopt;
    if (lo < hi) return CrossKind::overlap;
    return CrossKind::touch;  // single shared point, necessarily an endpoint
  }

  if (((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 &&
      ((o3 > 0) != (o4 > 0)) && o3 != 0 && o4 != 0) {
    return CrossKind::proper;
  }

  if ((o1 == 0 && on_segment(b1, a1, a2)) || (o2 == 0 && on_segment(b2, a1, a2)) ||
      (o3 == 0 && on_segment(a1, b1, b2)) || (o4 == 0 && on_segment(a2, b1, b2))) {
    return CrossKind::touch;
  }
  return std::nullopt;
}

}  // namespace sweepspace
