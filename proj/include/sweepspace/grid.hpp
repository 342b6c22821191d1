#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sweepspace/budget.hpp"
#include "sweepspace/navpile.hpp"

namespace sweepspace {

// Incrementally forms strips from a sorted key stream: a strip closes after
// `capacity` items, except that a run of equal keys is never split (the strip
// overflows instead). The separator between two strips is the midpoint of the
// key gap when one exists, else the first key of the next run, so it always
// satisfies last_key < next group and separator <= next group's first key.
//
// Stores nothing but the current group; callers that need all separators
// collect them into a StripGrid.
class StripStream {
 public:
  StripStream(NavPile& pile, uint64_t capacity);

  struct Group {
    std::vector<NavPile::Out> items;      // in (key, item) order
    std::optional<int64_t> upper_sep;     // none for the last strip
  };

  // Next strip, or nullopt when the stream is exhausted.
  std::optional<Group> next_group();

 private:
  NavPile* pile_;
  uint64_t capacity_;
  std::optional<NavPile::Out> pending_;
  bool done_ = false;
};

// Separator table over one axis. Strip i is the half-open interval
// [sep[i-1], sep[i]) with sep[-1] = -inf and sep[m-1] = +inf.
class StripGrid {
 public:
  // Streams the pile to completion; calls on_group for each strip's items.
  using GroupFn = std::function<void(uint32_t strip, const std::vector<NavPile::Out>&)>;
  static StripGrid build(NavPile& pile, uint64_t capacity, BitBudget& budget,
                         const GroupFn& on_group = nullptr);

  uint32_t strip_count() const { return m_; }
  const std::vector<int64_t>& separators() const { return seps_; }

  // Strip containing the key: i with sep[i-1] <= key < sep[i].
  uint32_t locate(int64_t key) const;

  // Closed-cover query: strips i with sep[i-1] >= lo and sep[i] <= hi,
  // i.e. [lo, hi] contains the whole strip including both separators.
  std::optional<std::pair<uint32_t, uint32_t>> span_range(int64_t lo, int64_t hi) const;

  // Strips the record's key interval covers without having an endpoint
  // inside: [locate(lo)+1, locate(hi)-1], empty when that range is.
  // This is the spanning notion the phase partitions are built on.
  std::optional<std::pair<uint32_t, uint32_t>> spanned_strips(int64_t lo, int64_t hi) const;

 private:
  uint32_t m_ = 1;
  std::vector<int64_t> seps_;
  Charge charge_;
};

}  // namespace sweepspace
