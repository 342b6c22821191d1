#include "sweepspace/oracle.hpp"

#include <algorithm>

namespace sweepspace {

PairResult bf_closest(const InputTape& tape) {
  const uint32_t n = tape.size();
  if (n < 2) throw UsageError("closest pair needs at least two points");
  PairResult best{0, 1, dist2(tape.point(0), tape.point(1))};
  for (uint32_t i = 0; i < n; ++i) {
    const Pt pi = tape.point(i);
    for (uint32_t j = i + 1; j < n; ++j) {
      const uint64_t d = dist2(pi, tape.point(j));
      const PairResult cand{i, j, d};
      if (pair_less(cand, best)) best = cand;
    }
  }
  return best;
}

std::vector<CrossRecord> bf_intersections(const InputTape& tape) {
  const uint32_t n = tape.size();
  const bool axis = tape.kind() == TapeKind::axis_segments;
  std::vector<CrossRecord> out;
  for (uint32_t i = 0; i < n; ++i) {
    const Seg a = tape.seg(i);
    for (uint32_t j = i + 1; j < n; ++j) {
      const Seg b = tape.seg(j);
      if (axis && is_vertical(a) == is_vertical(b)) continue;
      if (auto k = pair_intersects(a, b)) out.push_back({i, j, *k});
    }
  }
  return out;
}

std::pair<Coord, Coord> axis_crossing_point(Seg a, Seg b) {
  const Seg& v = is_vertical(a) ? a : b;
  const Seg& h = is_vertical(a) ? b : a;
  return {v.x1, h.y1};
}

int64_t bf_measure(const InputTape& tape) {
  const uint32_t n = tape.size();
  if (n == 0) return 0;
  std::vector<Coord> xs, ys;
  xs.reserve(2 * n);
  ys.reserve(2 * n);
  std::vector<Rect> rects(n);
  for (uint32_t i = 0; i < n; ++i) {
    rects[i] = tape.rect(i);
    xs.push_back(rects[i].xlo);
    xs.push_back(rects[i].xhi);
    ys.push_back(rects[i].ylo);
    ys.push_back(rects[i].yhi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  const size_t nx = xs.size() - 1, ny = ys.size() - 1;
  std::vector<uint8_t> covered(nx * ny, 0);
  for (const Rect& r : rects) {
    const size_t x0 = std::lower_bound(xs.begin(), xs.end(), r.xlo) - xs.begin();
    const size_t x1 = std::lower_bound(xs.begin(), xs.end(), r.xhi) - xs.begin();
    const size_t y0 = std::lower_bound(ys.begin(), ys.end(), r.ylo) - ys.begin();
    const size_t y1 = std::lower_bound(ys.begin(), ys.end(), r.yhi) - ys.begin();
    for (size_t xi = x0; xi < x1; ++xi)
      for (size_t yi = y0; yi < y1; ++yi) covered[xi * ny + yi] = 1;
  }
  int64_t area = 0;
  for (size_t xi = 0; xi < nx; ++xi) {
    const int64_t w = int64_t(xs[xi + 1]) - xs[xi];
    for (size_t yi = 0; yi < ny; ++yi) {
      if (covered[xi * ny + yi]) area += w * (int64_t(ys[yi + 1]) - ys[yi]);
    }
  }
  return area;
}

}  // namespace sweepspace
