#include "sweepspace/axis_common.hpp"

#include <algorithm>
#include <set>

#include "sweepspace/navpile.hpp"

namespace sweepspace {

HItem h_item(const Seg& s, uint32_t id) {
  return {std::min(s.x1, s.x2), std::max(s.x1, s.x2), s.y1, id};
}

VItem v_item(const Seg& s, uint32_t id) {
  return {s.x1, std::min(s.y1, s.y2), std::max(s.y1, s.y2), id};
}

namespace {

// (line coordinate, low endpoint) packed for pile streaming; the shifted line
// term dominates so ordering is lexicographic.
int64_t line_lo_key(bool vertical_pass, const Seg& s) {
  const bool v = is_vertical(s);
  if (v != vertical_pass) return INT64_MAX;  // other orientation sorts last
  const int64_t line = v ? s.x1 : s.y1;
  const int64_t lo = v ? std::min(s.y1, s.y2) : std::min(s.x1, s.x2);
  return (line << 32) | (lo + kCoordLimit);
}

}  // namespace

void validate_axis(const TapeView& view, uint64_t s, BitBudget& budget) {
  const uint32_t n = view.size();
  for (uint32_t i = 0; i < n; ++i) {
    const Seg sg = view.seg(i);
    if (sg.x1 != sg.x2 && sg.y1 != sg.y2)
      throw UsageError("segment " + std::to_string(view.global_id(i)) +
                       " is not axis-parallel");
  }
  for (const bool vertical_pass : {false, true}) {
    NavPile pile(n, [&](uint32_t i) { return line_lo_key(vertical_pass, view.seg(i)); },
                 NavPile::Threshold::all(), s, budget);
    int64_t cur_line = INT64_MIN;
    Coord cur_hi = 0;
    bool have = false;
    while (auto o = pile.next()) {
      if (o->key == INT64_MAX) break;
      const Seg sg = view.seg(o->item);
      const bool v = is_vertical(sg);
      const int64_t line = v ? sg.x1 : sg.y1;
      const Coord lo = v ? std::min(sg.y1, sg.y2) : std::min(sg.x1, sg.x2);
      const Coord hi = v ? std::max(sg.y1, sg.y2) : std::max(sg.x1, sg.x2);
      if (have && line == cur_line && lo < cur_hi)
        throw UsageError("collinear overlapping parallel segments in axis input");
      if (!have || line != cur_line || hi > cur_hi) {
        cur_line = line;
        cur_hi = hi;
        have = true;
      }
    }
  }
}

uint64_t count_hv(std::vector<HItem> hs, std::vector<VItem> vs, BitBudget& budget) {
  if (hs.empty() || vs.empty()) return 0;
  const uint64_t p = hs.size() + vs.size();
  const uint64_t w = word_bits(std::max<uint64_t>(2, p));
  // Events (3 words each), compressed ys and Fenwick counters (1 word each).
  Charge charge(budget, (3 * (2 * hs.size() + vs.size()) + 2 * hs.size()) * w);

  std::vector<Coord> ys(hs.size());
  for (size_t i = 0; i < hs.size(); ++i) ys[i] = hs[i].y;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const auto y_idx = [&](Coord y) {
    return static_cast<uint32_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
  };

  struct Ev {
    Coord x;
    uint8_t type;  // 0 = H start, 1 = V query, 2 = H end
    uint32_t idx;
  };
  std::vector<Ev> evs;
  evs.reserve(2 * hs.size() + vs.size());
  for (uint32_t i = 0; i < hs.size(); ++i) {
    evs.push_back({hs[i].xl, 0, i});
    evs.push_back({hs[i].xr, 2, i});
  }
  for (uint32_t i = 0; i < vs.size(); ++i) evs.push_back({vs[i].x, 1, i});
  std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.type != b.type) return a.type < b.type;
    return a.idx < b.idx;
  });

  std::vector<int32_t> fen(ys.size() + 1, 0);
  const auto add = [&](uint32_t i, int32_t d) {
    for (i += 1; i <= ys.size(); i += i & (~i + 1)) fen[i] += d;
  };
  const auto prefix = [&](int64_t i) {
    int64_t sum = 0;
    for (; i >= 1; i -= i & -i) sum += fen[i];
    return sum;
  };

  uint64_t total = 0;
  for (const Ev& e : evs) {
    if (e.type == 0) {
      add(y_idx(hs[e.idx].y), 1);
    } else if (e.type == 2) {
      add(y_idx(hs[e.idx].y), -1);
    } else {
      const VItem& v = vs[e.idx];
      const int64_t hi = std::upper_bound(ys.begin(), ys.end(), v.yu) - ys.begin();
      const int64_t lo = std::lower_bound(ys.begin(), ys.end(), v.yl) - ys.begin();
      total += uint64_t(prefix(hi) - prefix(lo));
    }
  }
  return total;
}

void report_hv(std::vector<HItem> hs, std::vector<VItem> vs, BitBudget& budget,
               const std::function<void(uint32_t h, uint32_t v)>& on_pair) {
  if (hs.empty() || vs.empty()) return;
  const uint64_t p = hs.size() + vs.size();
  const uint64_t w = word_bits(std::max<uint64_t>(2, p));
  Charge charge(budget, (3 * (2 * hs.size() + vs.size()) + 2 * hs.size()) * w);

  struct Ev {
    Coord x;
    uint8_t type;
    uint32_t idx;
  };
  std::vector<Ev> evs;
  evs.reserve(2 * hs.size() + vs.size());
  for (uint32_t i = 0; i < hs.size(); ++i) {
    evs.push_back({hs[i].xl, 0, i});
    evs.push_back({hs[i].xr, 2, i});
  }
  for (uint32_t i = 0; i < vs.size(); ++i) evs.push_back({vs[i].x, 1, i});
  std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.type != b.type) return a.type < b.type;
    return a.idx < b.idx;
  });

  std::set<std::pair<Coord, uint32_t>> active;  // (y, horizontal index)
  for (const Ev& e : evs) {
    if (e.type == 0) {
      active.insert({hs[e.idx].y, e.idx});
    } else if (e.type == 2) {
      active.erase({hs[e.idx].y, e.idx});
    } else {
      const VItem& v = vs[e.idx];
      for (auto it = active.lower_bound({v.yl, 0});
           it != active.end() && it->first <= v.yu; ++it) {
        on_pair(hs[it->second].id, v.id);
      }
    }
  }
}

std::vector<int64_t> spanning_from_bft(const std::vector<int64_t>& b,
                                       const std::vector<int64_t>& f,
                                       const std::vector<int64_t>& t) {
  std::vector<int64_t> spanning(b.size());
  int64_t e = 0;
  for (size_t j = 0; j < b.size(); ++j) {
    if (j > 0) e += b[j - 1] - f[j - 1];
    spanning[j] = e - f[j] + t[j];
  }
  return spanning;
}

int64_t endpoint_key_x(const TapeView& view, uint32_t item) {
  const Seg s = view.seg(item >> 1);
  return (item & 1) ? std::max(s.x1, s.x2) : std::min(s.x1, s.x2);
}

int64_t endpoint_key_y(const TapeView& view, uint32_t item) {
  const Seg s = view.seg(item >> 1);
  return (item & 1) ? std::max(s.y1, s.y2) : std::min(s.y1, s.y2);
}

std::vector<uint32_t> group_segment_ids(const std::vector<NavPile::Out>& items,
                                        BitBudget& budget, uint64_t view_size) {
  Charge charge(budget, items.size() * word_bits(std::max<uint64_t>(2, view_size)));
  std::vector<uint32_t> ids;
  ids.reserve(items.size());
  for (const auto& it : items) ids.push_back(it.item >> 1);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace sweepspace
