#include "sweepspace/grid.hpp"

#include <algorithm>

namespace sweepspace {

StripStream::StripStream(NavPile& pile, uint64_t capacity) : pile_(&pile), capacity_(capacity) {
  if (capacity_ < 1) throw UsageError("strip capacity must be >= 1");
}

std::optional<StripStream::Group> StripStream::next_group() {
  if (done_ && !pending_) return std::nullopt;
  Group g;
  if (pending_) {
    g.items.push_back(*pending_);
    pending_.reset();
  }
  while (g.items.size() < capacity_) {
    auto o = pile_->next();
    if (!o) { done_ = true; break; }
    g.items.push_back(*o);
  }
  if (!done_) {
    // Absorb the rest of a duplicate-key run, then derive the separator.
    const int64_t last = g.items.back().key;
    while (true) {
      auto o = pile_->next();
      if (!o) { done_ = true; break; }
      if (o->key == last) {
        g.items.push_back(*o);
        continue;
      }
      pending_ = *o;
      // Midpoint of the gap when one exists, else the next run's first key.
      g.upper_sep = (o->key - last >= 2) ? last + (o->key - last) / 2 : o->key;
      break;
    }
  }
  if (g.items.empty()) return std::nullopt;
  return g;
}

StripGrid StripGrid::build(NavPile& pile, uint64_t capacity, BitBudget& budget,
                           const GroupFn& on_group) {
  StripGrid grid;
  StripStream stream(pile, capacity);
  uint32_t strip = 0;
  std::vector<int64_t> seps;
  Charge charge(budget, 0);
  while (auto g = stream.next_group()) {
    if (on_group) on_group(strip, g->items);
    if (g->upper_sep) {
      seps.push_back(*g->upper_sep);
      charge.resize(seps.size() * word_bits(std::max<uint64_t>(2, seps.size() + 1)));
    }
    ++strip;
  }
  grid.m_ = std::max<uint32_t>(1, strip);
  grid.seps_ = std::move(seps);
  grid.charge_ = std::move(charge);
  return grid;
}

uint32_t StripGrid::locate(int64_t key) const {
  // First separator strictly greater than key gives the strip index.
  return static_cast<uint32_t>(std::upper_bound(seps_.begin(), seps_.end(), key) -
                               seps_.begin());
}

std::optional<std::pair<uint32_t, uint32_t>> StripGrid::span_range(int64_t lo,
                                                                   int64_t hi) const {
  if (lo > hi) throw UsageError("span_range: lo > hi");
  // Strip i qualifies iff sep[i-1] >= lo and sep[i] <= hi, so i ranges from
  // (first separator position with sep >= lo) + 1 to the last position with
  // sep <= hi.
  const size_t p_lo = static_cast<size_t>(std::lower_bound(seps_.begin(), seps_.end(), lo) -
                                          seps_.begin());
  const size_t ub = static_cast<size_t>(std::upper_bound(seps_.begin(), seps_.end(), hi) -
                                        seps_.begin());
  if (p_lo >= seps_.size() || ub == 0) return std::nullopt;
  const size_t p_hi = ub - 1;
  if (p_lo + 1 > p_hi) return std::nullopt;
  return std::make_pair(static_cast<uint32_t>(p_lo + 1), static_cast<uint32_t>(p_hi));
}

std::optional<std::pair<uint32_t, uint32_t>> StripGrid::spanned_strips(int64_t lo,
                                                                       int64_t hi) const {
  const uint32_t jl = locate(lo), jr = locate(hi);
  if (jr < 2 || jl + 2 > jr) return std::nullopt;
  return std::make_pair(jl + 1, jr - 1);
}

}  // namespace sweepspace
