#include "sweepspace/closest.hpp"

#include <algorithm>

#include "sweepspace/constants.hpp"
#include "sweepspace/grid.hpp"
#include "sweepspace/navpile.hpp"
#include "sweepspace/stretch.hpp"

namespace sweepspace {
namespace detail {

namespace {

constexpr uint64_t kInf = ~uint64_t(0);
constexpr uint32_t kNoneId = ~uint32_t(0);

PairResult global_pair(const TapeView& view, uint32_t a, uint32_t b, uint64_t d) {
  uint32_t gi = view.global_id(a), gj = view.global_id(b);
  if (gi > gj) std::swap(gi, gj);
  return {gi, gj, d};
}

void take_min(PairResult& best, bool& have, const PairResult& cand) {
  if (!have || pair_less(cand, best)) {
    best = cand;
    have = true;
  }
}

// Sort keys are re-read from the view; only ids live in the buffers.
struct IdXY {
  const TapeView* view;
  bool operator()(uint32_t a, uint32_t b) const {
    const Pt pa = view->point(a), pb = view->point(b);
    if (pa.x != pb.x) return pa.x < pb.x;
    if (pa.y != pb.y) return pa.y < pb.y;
    return a < b;
  }
};

struct IdYX {
  const TapeView* view;
  bool operator()(uint32_t a, uint32_t b) const {
    const Pt pa = view->point(a), pb = view->point(b);
    if (pa.y != pb.y) return pa.y < pb.y;
    if (pa.x != pb.x) return pa.x < pb.x;
    return a < b;
  }
};

// Recursion over ids[lo, hi) sorted by (x, y, id); strip is shared scratch.
void dnc(const TapeView& view, std::vector<uint32_t>& ids, size_t lo, size_t hi,
         std::vector<uint32_t>& strip, PairResult& best, bool& have) {
  const size_t p = hi - lo;
  if (p <= 3) {
    for (size_t a = lo; a < hi; ++a)
      for (size_t b = a + 1; b < hi; ++b)
        take_min(best, have,
                 global_pair(view, ids[a], ids[b], dist2(view.point(ids[a]), view.point(ids[b]))));
    return;
  }
  const size_t mid = lo + p / 2;
  const Coord xmid = view.point(ids[mid]).x;
  dnc(view, ids, lo, mid, strip, best, have);
  dnc(view, ids, mid, hi, strip, best, have);

  // Non-strict bounds so equal-distance cross pairs can win the lex tie-break.
  strip.clear();
  for (size_t a = lo; a < hi; ++a) {
    const int64_t dx = int64_t(view.point(ids[a]).x) - xmid;
    if (uint64_t(dx * dx) <= best.dist2) strip.push_back(ids[a]);
  }
  std::sort(strip.begin(), strip.end(), IdYX{&view});
  for (size_t a = 0; a < strip.size(); ++a) {
    const Pt pa = view.point(strip[a]);
    for (size_t b = a + 1; b < strip.size(); ++b) {
      const Pt pb = view.point(strip[b]);
      const int64_t dy = int64_t(pb.y) - pa.y;
      if (uint64_t(dy * dy) > best.dist2) break;
      take_min(best, have, global_pair(view, strip[a], strip[b], dist2(pa, pb)));
    }
  }
}

}  // namespace

PairResult incore_closest(const TapeView& view, std::vector<uint32_t> ids, BitBudget& budget) {
  const uint64_t w = word_bits(view.size());
  Charge scratch(budget, 2 * ids.size() * w);  // owned id buffer + strip scratch

  std::sort(ids.begin(), ids.end(), IdXY{&view});

  // Zero-distance pre-pass: duplicates void the strip-scan packing argument,
  // and a zero pair cannot be beaten, only tie-broken (two smallest ids of
  // the lexicographically first duplicate run... all zero pairs compare by
  // ids only, so take the global minimum over runs).
  {
    PairResult zero{};
    bool have_zero = false;
    for (size_t a = 0; a + 1 < ids.size();) {
      const Pt pa = view.point(ids[a]);
      uint32_t g0 = view.global_id(ids[a]), g1 = kNoneId;
      size_t b = a + 1;
      while (b < ids.size()) {
        const Pt pb = view.point(ids[b]);
        if (pb.x != pa.x || pb.y != pa.y) break;
        const uint32_t g = view.global_id(ids[b]);
        if (g < g0) { g1 = g0; g0 = g; }
        else if (g1 == kNoneId || g < g1) g1 = g;
        ++b;
      }
      if (g1 != kNoneId) take_min(zero, have_zero, {g0, g1, 0});
      a = b;
    }
    if (have_zero) return zero;
  }

  PairResult best{};
  bool have = false;
  std::vector<uint32_t> strip;
  strip.reserve(ids.size());
  dnc(view, ids, 0, ids.size(), strip, best, have);
  return best;
}

PairResult closest_direct(const TapeView& view, uint64_t s, BitBudget& budget,
                          ClosestDebug* dbg) {
  const uint32_t n = view.size();
  const uint64_t lg = ceil_lg(n);
  const uint64_t cap = std::max<uint64_t>(1, (s + lg - 1) / lg);

  PairResult best{};
  bool have = false;

  // Pass 1: vertical strips of ceil(s / lg n) points, in-core solve per strip.
  StripGrid grid = [&] {
    NavPile by_x(n, [&](uint32_t i) { return int64_t(view.point(i).x); },
                 NavPile::Threshold::all(), s, budget);
    return StripGrid::build(by_x, cap, budget, [&](uint32_t, const auto& items) {
      if (items.size() < 2) return;
      Charge buf(budget, items.size() * word_bits(n));
      std::vector<uint32_t> ids;
      ids.reserve(items.size());
      for (const auto& it : items) ids.push_back(it.item);
      take_min(best, have, incore_closest(view, std::move(ids), budget));
    });
  }();

  if (dbg) {
    dbg->separators = grid.separators();
    dbg->delta_pass1 = have ? best.dist2 : kInf;
  }
  if (have && best.dist2 == 0) return best;  // nothing beats a zero pair
  if (grid.strip_count() <= 1) {
    if (!have) throw UsageError("closest pair needs at least two points");
    return best;
  }

  // Pass 2: stream by y, keep points within horizontal distance delta of a
  // separator, solve every two consecutive groups of 8m candidates.
  const uint64_t delta = have ? best.dist2 : kInf;
  const auto& seps = grid.separators();
  const uint64_t group_cap = 8 * uint64_t(grid.strip_count());
  if (dbg) dbg->group_size = group_cap;

  const auto near_separator = [&](Coord x) {
    const uint32_t loc = grid.locate(x);
    if (loc > 0) {
      const int64_t dx = int64_t(x) - seps[loc - 1];
      if (uint64_t(dx * dx) < delta) return true;
    }
    if (loc < seps.size()) {
      const int64_t dx = int64_t(seps[loc]) - x;
      if (uint64_t(dx * dx) < delta) return true;
    }
    return false;
  };

  NavPile by_y(n, [&](uint32_t i) { return int64_t(view.point(i).y); },
               NavPile::Threshold::all(), s, budget);

  Charge groups_charge(budget, 2 * group_cap * word_bits(n));
  std::vector<uint32_t> prev, cur;
  bool first_group = true;
  bool solved_pair = false;
  const auto solve_ids = [&](std::vector<uint32_t> ids) {
    if (ids.size() < 2) return;
    take_min(best, have, incore_closest(view, std::move(ids), budget));
    solved_pair = true;
  };

  while (auto o = by_y.next()) {
    const Pt p = view.point(o->item);
    if (!near_separator(p.x)) continue;
    if (dbg) dbg->candidates.push_back(view.global_id(o->item));
    cur.push_back(o->item);
    if (cur.size() == group_cap) {
      if (!first_group) {
        std::vector<uint32_t> both(prev);
        both.insert(both.end(), cur.begin(), cur.end());
        solve_ids(std::move(both));
      }
      prev = std::move(cur);
      cur.clear();
      first_group = false;
    }
  }
  if (!cur.empty()) {
    if (!first_group) {
      std::vector<uint32_t> both(prev);
      both.insert(both.end(), cur.begin(), cur.end());
      solve_ids(std::move(both));
    } else {
      solve_ids(std::move(cur));
    }
  } else if (!first_group && !solved_pair) {
    solve_ids(std::move(prev));  // exactly one (full) candidate group
  }

  if (!have) throw UsageError("closest pair needs at least two points");
  return best;
}

PairResult closest_stretched(const InputTape& tape, uint64_t s, BitBudget& budget) {
  const uint32_t n = tape.size();
  const uint64_t lgs = ceil_lg(s);
  const uint64_t r = std::min<uint64_t>(n, std::max<uint64_t>(2, (s * s) / (lgs * lgs)));
  const auto plan = BatchPlan::plan(n, static_cast<uint32_t>(r), CombineMode::min_combine);
  return run_min<PairResult>(
      tape, plan,
      [&](const TapeView& view) { return closest_direct(view, s, budget); },
      pair_less);
}

}  // namespace detail

PairResult closest_pair(const InputTape& tape, uint64_t s, RunStats* stats) {
  const uint32_t n = tape.size();
  if (n < 2) throw UsageError("closest pair needs at least two points");
  const uint64_t lg = ceil_lg(n);
  if (s < lg) throw UsageError("workspace below the lg n model minimum");

  BitBudget budget(WorkspaceConstants::closest * s);
  PairResult out;
  // The direct two-pass mode needs s >= sqrt(n) * lg n to hold the separators.
  const bool direct = __int128(s) * s >= __int128(n) * lg * lg;
  if (direct) {
    out = detail::closest_direct(TapeView(tape), s, budget);
  } else {
    out = detail::closest_stretched(tape, s, budget);
  }
  if (stats) *stats = {budget.peak_bits(), budget.capacity_bits()};
  return out;
}

}  // namespace sweepspace
