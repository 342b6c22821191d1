#include "sweepspace/navpile.hpp"

#include <bit>

namespace sweepspace {

NavPile::NavPile(uint32_t n_items, KeyFn key, Threshold threshold, uint64_t s_bits,
                 BitBudget& budget)
    : n_(n_items), key_(std::move(key)), floor_key_(threshold.key),
      floor_item_(threshold.item) {
  if (n_ == 0) throw UsageError("navigation pile over empty sequence");
  const uint64_t lg = ceil_lg(n_);
  b_ = static_cast<uint32_t>(std::max<uint64_t>(1, std::min<uint64_t>(n_, s_bits / (2 * lg))));
  width_ = (n_ + b_ - 1) / b_;
  leaves_ = std::bit_ceil(b_);

  // Candidate item + cached key per bucket, winner per tournament slot,
  // and the resumption floor: all one model word each.
  charge_ = Charge(budget, (uint64_t(2) * b_ + leaves_ + 2) * word_bits(n_));
  leaf_item_.assign(b_, kNone);
  leaf_key_.assign(b_, 0);
  node_.assign(leaves_, kNone);  // heap layout, slots 1..leaves_-1 hold winners

  // Single initialization pass over all items.
  for (uint32_t i = 0; i < n_; ++i) {
    const int64_t k = key_(i);
    if (k < floor_key_ || (k == floor_key_ && int64_t(i) <= floor_item_)) continue;
    const uint32_t g = i / width_;
    if (leaf_item_[g] == kNone || k < leaf_key_[g] ||
        (k == leaf_key_[g] && i < leaf_item_[g])) {
      leaf_item_[g] = i;
      leaf_key_[g] = k;
    }
  }
  for (uint32_t g = b_; g-- > 0;) replay_path(g);
}

bool NavPile::less_at(uint32_t g, uint32_t h) const {
  if (leaf_key_[g] != leaf_key_[h]) return leaf_key_[g] < leaf_key_[h];
  return leaf_item_[g] < leaf_item_[h];
}

void NavPile::replay_path(uint32_t g) {
  const auto slot_winner = [&](uint32_t slot) -> uint32_t {
    if (slot >= leaves_) {
      const uint32_t leaf = slot - leaves_;
      return (leaf < b_ && leaf_item_[leaf] != kNone) ? leaf : kNone;
    }
    return node_[slot];
  };
  for (uint32_t node = (leaves_ + g) >> 1; node >= 1; node >>= 1) {
    const uint32_t wl = slot_winner(node << 1);
    const uint32_t wr = slot_winner((node << 1) | 1);
    if (wl == kNone) node_[node] = wr;
    else if (wr == kNone) node_[node] = wl;
    else node_[node] = less_at(wl, wr) ? wl : wr;
  }
}

void NavPile::rescan_bucket(uint32_t g) {
  const uint32_t lo = g * width_;
  const uint32_t hi = std::min(n_, lo + width_);
  uint32_t best = kNone;
  int64_t best_key = 0;
  for (uint32_t i = lo; i < hi; ++i) {
    const int64_t k = key_(i);
    if (k < floor_key_ || (k == floor_key_ && int64_t(i) <= floor_item_)) continue;
    if (best == kNone || k < best_key || (k == best_key && i < best)) {
      best = i;
      best_key = k;
    }
  }
  leaf_item_[g] = best;
  leaf_key_[g] = best == kNone ? 0 : best_key;
}

std::optional<NavPile::Out> NavPile::next() {
  const uint32_t g = b_ == 1 ? (leaf_item_[0] == kNone ? kNone : 0) : node_[1];
  if (g == kNone) return std::nullopt;
  const Out out{leaf_item_[g], leaf_key_[g]};
  floor_key_ = out.key;
  floor_item_ = int64_t(out.item);
  rescan_bucket(g);
  if (b_ > 1) replay_path(g);
  return out;
}

std::vector<NavPile::Out> NavPile::stream_k(uint64_t k) {
  std::vector<Out> out;
  for (uint64_t i = 0; i < k; ++i) {
    auto o = next();
    if (!o) break;
    out.push_back(*o);
  }
  return out;
}

}  // namespace sweepspace
