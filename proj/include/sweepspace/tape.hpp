#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "sweepspace/core.hpp"

namespace sweepspace {

enum class TapeKind { points, segments, axis_segments, rectangles };

struct Pt { Coord x, y; };
struct Seg { Coord x1, y1, x2, y2; };
struct Rect { Coord xlo, ylo, xhi, yhi; };

// Immutable, metered accessor over the input records. Models the read-only
// input medium: its own storage is not charged to any workspace budget, and
// every record access bumps the read counter.
class InputTape {
 public:
  InputTape(TapeKind kind, std::vector<std::array<Coord, 4>> records)
      : kind_(kind), records_(std::move(records)) {}

  InputTape(const InputTape&) = delete;
  InputTape& operator=(const InputTape&) = delete;

  TapeKind kind() const { return kind_; }
  uint32_t size() const { return static_cast<uint32_t>(records_.size()); }
  uint64_t read_count() const { return reads_.load(std::memory_order_relaxed); }

  std::array<Coord, 4> get(uint32_t i) const {
    if (i >= records_.size()) throw UsageError("tape index out of range");
    reads_.fetch_add(1, std::memory_order_relaxed);
    return records_[i];
  }

  Pt point(uint32_t i) const { auto r = get(i); return {r[0], r[1]}; }
  Seg seg(uint32_t i) const { auto r = get(i); return {r[0], r[1], r[2], r[3]}; }
  Rect rect(uint32_t i) const { auto r = get(i); return {r[0], r[1], r[2], r[3]}; }

 private:
  TapeKind kind_;
  std::vector<std::array<Coord, 4>> records_;
  mutable std::atomic<uint64_t> reads_{0};
};

// Read-only window over a tape: one or two contiguous index ranges (a batch,
// or the union of a batch pair). Algorithms address records by local index;
// stored local indices cost one model word of the view, which is what makes
// the stretched variants' space accounting work out.
class TapeView {
 public:
  explicit TapeView(const InputTape& tape)
      : tape_(&tape), lo1_(0), len1_(tape.size()), lo2_(0), len2_(0) {}
  TapeView(const InputTape& tape, uint32_t lo, uint32_t hi)
      : tape_(&tape), lo1_(lo), len1_(hi - lo), lo2_(0), len2_(0) {}
  TapeView(const InputTape& tape, uint32_t lo_a, uint32_t hi_a, uint32_t lo_b, uint32_t hi_b)
      : tape_(&tape), lo1_(lo_a), len1_(hi_a - lo_a), lo2_(lo_b), len2_(hi_b - lo_b) {}

  const InputTape& tape() const { return *tape_; }
  uint32_t size() const { return len1_ + len2_; }

  uint32_t global_id(uint32_t local) const {
    return local < len1_ ? lo1_ + local : lo2_ + (local - len1_);
  }
  // True when the local index falls in the first range (batch coloring).
  bool in_first_range(uint32_t local) const { return local < len1_; }

  std::array<Coord, 4> get(uint32_t local) const { return tape_->get(global_id(local)); }
  Pt point(uint32_t local) const { return tape_->point(global_id(local)); }
  Seg seg(uint32_t local) const { return tape_->seg(global_id(local)); }
  Rect rect(uint32_t local) const { return tape_->rect(global_id(local)); }

 private:
  const InputTape* tape_;
  uint32_t lo1_, len1_, lo2_, len2_;
};

// Text ingestion: one record per line, ASCII decimal integers separated by
// single spaces; lines starting with '#' are comments. Rejects coordinates
// outside [-2^30, 2^30] and malformed records.
InputTape load_tape(TapeKind kind, const std::string& path);
InputTape parse_tape(TapeKind kind, const std::string& text);

}  // namespace sweepspace
