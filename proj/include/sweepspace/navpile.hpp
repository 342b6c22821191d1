#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sweepspace/budget.hpp"
#include "sweepspace/core.hpp"

namespace sweepspace {

// Streams the items of a read-only sequence whose key exceeds a threshold, in
// ascending (key, item) order, using b = max(1, floor(s / 2 lg n)) bucket
// cursors. Extraction rescans only the winning bucket (ceil(n/b) key reads)
// and replays the tournament path against cached bucket keys.
//
// Items are abstract indices [0, n); the key function reads the underlying
// tape (metered there). Descending order is a negated key function.
class NavPile {
 public:
  using KeyFn = std::function<int64_t(uint32_t item)>;

  struct Threshold {
    int64_t key;
    int64_t item;  // stream resumes strictly after (key, item)

    // Strictly above a key, any item.
    static Threshold above_key(int64_t k) { return {k, INT64_MAX}; }
    static Threshold all() { return {INT64_MIN, INT64_MIN}; }
    static Threshold after(int64_t k, uint32_t item) { return {k, int64_t(item)}; }
  };

  NavPile(uint32_t n_items, KeyFn key, Threshold threshold, uint64_t s_bits,
          BitBudget& budget);

  struct Out {
    uint32_t item;
    int64_t key;
  };

  // Smallest not-yet-emitted (key, item) above the threshold, or nullopt.
  std::optional<Out> next();

  // Up to k further outputs, stopping early when exhausted.
  std::vector<Out> stream_k(uint64_t k);

  uint32_t bucket_count() const { return b_; }
  uint32_t bucket_width() const { return width_; }

 private:
  static constexpr uint32_t kNone = ~uint32_t(0);

  bool less_at(uint32_t g, uint32_t h) const;  // leaf order by (key, item)
  void replay_path(uint32_t g);
  void rescan_bucket(uint32_t g);

  uint32_t n_;
  KeyFn key_;
  int64_t floor_key_;
  int64_t floor_item_;
  uint32_t b_;
  uint32_t width_;
  uint32_t leaves_;                 // b_ rounded up to a power of two
  std::vector<uint32_t> leaf_item_; // candidate item per bucket, kNone if spent
  std::vector<int64_t> leaf_key_;   // cached candidate key
  std::vector<uint32_t> node_;      // winning bucket per internal node
  Charge charge_;
};

}  // namespace sweepspace
