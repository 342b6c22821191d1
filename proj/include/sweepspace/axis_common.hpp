#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sweepspace/budget.hpp"
#include "sweepspace/grid.hpp"
#include "sweepspace/oracle.hpp"
#include "sweepspace/tape.hpp"

namespace sweepspace {

// Shared plumbing for the axis-parallel intersection algorithms. H-V pairs
// intersect by closed-interval containment: xl <= vx <= xr and yl <= hy <= yu.
// A segment with x1 == x2 is vertical (degenerate points count as vertical).

struct HItem {
  Coord xl, xr, y;
  uint32_t id;  // view-local
};
struct VItem {
  Coord x, yl, yu;
  uint32_t id;
};

// Normalized accessors.
HItem h_item(const Seg& s, uint32_t id);
VItem v_item(const Seg& s, uint32_t id);

// Rejects non-axis-parallel records and collinear overlapping parallel
// segments (the crossing model has no H-H/V-V intersections, so overlapping
// parallels would make the count ill-defined). Runs within the budget: two
// pile streams ordered by (line, low endpoint) with O(1) carried state.
void validate_axis(const TapeView& view, uint64_t s, BitBudget& budget);

// Exact count of intersecting pairs between the given horizontals and
// verticals: x-sweep with a Fenwick tree over compressed y.
uint64_t count_hv(std::vector<HItem> hs, std::vector<VItem> vs, BitBudget& budget);

// Reporting variant: ordered active set keyed by y; every vertical range-
// reports. on_pair receives view-local ids (h, v), in deterministic sweep
// order (ascending x; ties: queries ordered by vertical id, actives by y).
void report_hv(std::vector<HItem> hs, std::vector<VItem> vs, BitBudget& budget,
               const std::function<void(uint32_t h, uint32_t v)>& on_pair);

// Per-row spanning counts from the begin/finish/interior counters:
// e[0] = 0, e[j] = e[j-1] + b[j-1] - f[j-1], spanning[j] = e[j] - f[j] + t[j].
std::vector<int64_t> spanning_from_bft(const std::vector<int64_t>& b,
                                       const std::vector<int64_t>& f,
                                       const std::vector<int64_t>& t);

// Builds both endpoint piles' keys: items are endpoint slots 2*seg + end.
int64_t endpoint_key_x(const TapeView& view, uint32_t item);
int64_t endpoint_key_y(const TapeView& view, uint32_t item);

// Collects the distinct segment ids of one strip's endpoint group.
std::vector<uint32_t> group_segment_ids(const std::vector<NavPile::Out>& items,
                                        BitBudget& budget, uint64_t view_size);

}  // namespace sweepspace
