#include "sweepspace/budget.hpp"

#include <bit>

namespace sweepspace {

void RankSelect::build(BitBudget& budget) {
  const uint64_t n = bv_->size();
  const uint64_t n_super = n / kSuperBits + 1;
  const uint64_t n_block = n / kBlockBits + 1;
  super_.assign(n_super, 0);
  block_.assign(n_block, 0);
  charge_ = Charge(budget, n_super * 64 + n_block * 16);

  const auto& words = bv_->words();
  uint64_t total = 0;
  uint64_t super_base = 0;
  for (uint64_t b = 0; b < n_block; ++b) {
    const uint64_t bit0 = b * kBlockBits;
    if (bit0 % kSuperBits == 0) {
      super_[bit0 / kSuperBits] = total;
      super_base = total;
    }
    block_[b] = static_cast<uint16_t>(total - super_base);
    for (uint64_t w = bit0 / 64; w < (bit0 + kBlockBits) / 64 && w < words.size(); ++w) {
      total += static_cast<uint64_t>(std::popcount(words[w]));
    }
  }
  ones_ = total;
}

uint64_t RankSelect::rank(uint64_t i) const {
  if (i > bv_->size()) throw UsageError("rank: position out of range");
  uint64_t r = super_[i / kSuperBits] + block_[i / kBlockBits];
  const auto& words = bv_->words();
  const uint64_t word0 = (i / kBlockBits) * (kBlockBits / 64);
  for (uint64_t w = word0; w < i / 64; ++w) r += std::popcount(words[w]);
  if (i & 63) r += std::popcount(words[i / 64] & ((uint64_t(1) << (i & 63)) - 1));
  return r;
}

uint64_t RankSelect::select(uint64_t j) const {
  if (j < 1 || j > ones_) throw NotFound("select: ordinal out of range");
  // Superblock: last superblock with rank < j.
  uint64_t lo = 0, hi = super_.size() - 1;
  while (lo < hi) {
    uint64_t mid = (lo + hi + 1) / 2;
    if (super_[mid] < j) lo = mid; else hi = mid - 1;
  }
  const uint64_t rem0 = j - super_[lo];
  // Block within the superblock.
  const uint64_t blk0 = lo * (kSuperBits / kBlockBits);
  const uint64_t blk_end = std::min<uint64_t>(block_.size() - 1, blk0 + kSuperBits / kBlockBits - 1);
  uint64_t b = blk0, bhi = blk_end;
  while (b < bhi) {
    uint64_t mid = (b + bhi + 1) / 2;
    if (block_[mid] < rem0) b = mid; else bhi = mid - 1;
  }
  uint64_t rem = rem0 - block_[b];
  const auto& words = bv_->words();
  for (uint64_t w = b * (kBlockBits / 64); w < words.size(); ++w) {
    const uint64_t pc = std::popcount(words[w]);
    if (pc >= rem) {
      uint64_t word = words[w];
      for (uint64_t k = 1; k < rem; ++k) word &= word - 1;  // drop rem-1 lowest ones
      return w * 64 + std::countr_zero(word);
    }
    rem -= pc;
  }
  throw NotFound("select: inconsistent directory");
}

uint64_t RankSelect::next_one(uint64_t i) const {
  const uint64_t n = bv_->size();
  if (i >= n) return npos;
  const auto& words = bv_->words();
  uint64_t w = i / 64;
  uint64_t cur = words[w] & ~((uint64_t(1) << (i & 63)) - 1);
  while (true) {
    if (cur) {
      const uint64_t pos = w * 64 + std::countr_zero(cur);
      return pos < n ? pos : npos;
    }
    if (++w >= words.size()) return npos;
    cur = words[w];
  }
}

}  // namespace sweepspace
