#pragma once

#include <cstdint>
#include <vector>

#include "sweepspace/core.hpp"

namespace sweepspace {

// Workspace accounting arena. An algorithm run owns one BitBudget sized
// C_algo * s bits; every container it keeps alive is charged here. live_bits
// never exceeds capacity_bits (alloc throws BudgetExceeded first) and
// peak_bits records the high-water mark.
class BitBudget {
 public:
  explicit BitBudget(uint64_t capacity_bits) : capacity_(capacity_bits) {}

  void alloc(uint64_t bits) {
    if (live_ + bits > capacity_) {
      throw BudgetExceeded("workspace cap " + std::to_string(capacity_) +
                           " bits exceeded: live " + std::to_string(live_) +
                           " + " + std::to_string(bits));
    }
    live_ += bits;
    if (live_ > peak_) peak_ = live_;
  }

  void release(uint64_t bits) { live_ -= bits; }

  uint64_t capacity_bits() const { return capacity_; }
  uint64_t live_bits() const { return live_; }
  uint64_t peak_bits() const { return peak_; }

 private:
  uint64_t capacity_;
  uint64_t live_ = 0;
  uint64_t peak_ = 0;
};

// RAII charge against a budget. Movable so structures can own their charge.
class Charge {
 public:
  Charge() = default;
  Charge(BitBudget& budget, uint64_t bits) : budget_(&budget), bits_(bits) {
    budget_->alloc(bits_);
  }
  Charge(Charge&& o) noexcept : budget_(o.budget_), bits_(o.bits_) {
    o.budget_ = nullptr;
    o.bits_ = 0;
  }
  Charge& operator=(Charge&& o) noexcept {
    if (this != &o) {
      reset();
      budget_ = o.budget_;
      bits_ = o.bits_;
      o.budget_ = nullptr;
      o.bits_ = 0;
    }
    return *this;
  }
  Charge(const Charge&) = delete;
  Charge& operator=(const Charge&) = delete;
  ~Charge() { reset(); }

  // Grows (or shrinks) the charge in place.
  void resize(uint64_t bits) {
    if (!budget_) return;
    if (bits > bits_) budget_->alloc(bits - bits_);
    else budget_->release(bits_ - bits);
    bits_ = bits;
  }

  void reset() {
    if (budget_) budget_->release(bits_);
    budget_ = nullptr;
    bits_ = 0;
  }

  uint64_t bits() const { return bits_; }

 private:
  BitBudget* budget_ = nullptr;
  uint64_t bits_ = 0;
};

// Packed bit vector charged against a budget (physical bits).
class BitVector {
 public:
  BitVector() = default;
  BitVector(BitBudget& budget, uint64_t length)
      : length_(length),
        words_((length + 63) / 64, 0),
        charge_(budget, length) {}

  uint64_t size() const { return length_; }

  void set(uint64_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void clear(uint64_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool get(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  uint64_t length_ = 0;
  std::vector<uint64_t> words_;
  Charge charge_;
};

// Two-level rank directory over a BitVector: superblocks of 4096 bits hold
// absolute ranks (64-bit), blocks of 256 bits hold 16-bit ranks relative to
// their superblock. Select is a binary search over superblocks, then blocks,
// then a word scan. Directory overhead is 16/256 + 64/4096 < 0.25 per bit.
class RankSelect {
 public:
  static constexpr uint64_t kSuperBits = 4096;
  static constexpr uint64_t kBlockBits = 256;

  RankSelect() = default;
  RankSelect(BitBudget& budget, const BitVector& bv) : bv_(&bv) { build(budget); }

  // Number of 1-bits among positions [0, i).
  uint64_t rank(uint64_t i) const;

  // Position of the j-th 1-bit, j in [1, ones()].
  uint64_t select(uint64_t j) const;

  // Smallest set position >= i, or npos.
  static constexpr uint64_t npos = ~uint64_t(0);
  uint64_t next_one(uint64_t i) const;

  uint64_t ones() const { return ones_; }
  uint64_t directory_bits() const { return charge_.bits(); }

 private:
  void build(BitBudget& budget);

  const BitVector* bv_ = nullptr;
  std::vector<uint64_t> super_;    // absolute rank at each superblock start
  std::vector<uint16_t> block_;    // rank relative to the enclosing superblock
  uint64_t ones_ = 0;
  Charge charge_;
};

}  // namespace sweepspace
