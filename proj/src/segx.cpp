#include "sweepspace/segx.hpp"

#include <algorithm>

#include "sweepspace/constants.hpp"
#include "sweepspace/predicates.hpp"
#include "sweepspace/stretch.hpp"

namespace sweepspace {

namespace {

// In-core plane sweep over the view's segments: endpoints drive an x-ordered
// scan; each arriving segment is tested against the active set (segments
// whose x-interval reaches the current abscissa) with the exact predicate.
// cross_only restricts reporting to pairs straddling the view's two ranges.
void sweep_view(const TapeView& view, bool cross_only, BitBudget& budget,
                const CrossSink& sink, uint64_t& k) {
  const uint32_t p = view.size();
  if (p < 2) return;
  const uint64_t w = word_bits(p);
  Charge charge(budget, 2 * uint64_t(p) * w);  // sorted order + active list

  std::vector<uint32_t> order(p);
  for (uint32_t i = 0; i < p; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    const Seg sa = view.seg(a), sb = view.seg(b);
    const Coord ka = std::min(sa.x1, sa.x2), kb = std::min(sb.x1, sb.x2);
    if (ka != kb) return ka < kb;
    return a < b;
  });

  std::vector<uint32_t> active;
  active.reserve(p);
  for (const uint32_t cur : order) {
    const Seg sc = view.seg(cur);
    const Coord clo = std::min(sc.x1, sc.x2);
    const Coord cylo = std::min(sc.y1, sc.y2), cyhi = std::max(sc.y1, sc.y2);
    // Drop actives that end before the sweep line; test the rest.
    size_t keep = 0;
    for (size_t t = 0; t < active.size(); ++t) {
      const uint32_t a = active[t];
      const Seg sa = view.seg(a);
      if (std::max(sa.x1, sa.x2) < clo) continue;
      active[keep++] = a;
      if (cross_only && view.in_first_range(a) == view.in_first_range(cur)) continue;
      if (std::max(sa.y1, sa.y2) < cylo || std::min(sa.y1, sa.y2) > cyhi) continue;
      if (auto kind = pair_intersects(sa, sc)) {
        uint32_t gi = view.global_id(a), gj = view.global_id(cur);
        if (gi > gj) std::swap(gi, gj);
        sink({gi, gj, *kind});
        ++k;
      }
    }
    active.resize(keep);
    active.push_back(cur);
  }
}

}  // namespace

uint64_t segx_enumerate(const InputTape& tape, uint64_t s, const CrossSink& sink,
                        RunStats* stats) {
  const uint32_t n = tape.size();
  const uint64_t lg = ceil_lg(n);
  if (s < lg) throw UsageError("workspace below the lg n model minimum");
  BitBudget budget(WorkspaceConstants::segx * s);
  uint64_t k = 0;
  if (n >= 2) {
    const uint64_t r = std::min<uint64_t>(n, std::max<uint64_t>(1, s / ceil_lg(s)));
    const auto plan = BatchPlan::plan(n, static_cast<uint32_t>(r), CombineMode::disjoint_combine);
    run_disjoint(
        tape, plan,
        [&](const TapeView& batch) { sweep_view(batch, false, budget, sink, k); },
        [&](const TapeView& pair) { sweep_view(pair, true, budget, sink, k); });
  }
  if (stats) *stats = {budget.peak_bits(), budget.capacity_bits()};
  return k;
}

uint64_t segx_count(const InputTape& tape, uint64_t s, RunStats* stats) {
  return segx_enumerate(tape, s, [](const CrossRecord&) {}, stats);
}

}  // namespace sweepspace
