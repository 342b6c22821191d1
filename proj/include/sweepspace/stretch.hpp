#pragma once

#include <cstdint>
#include <vector>

#include "sweepspace/core.hpp"
#include "sweepspace/tape.hpp"

namespace sweepspace {

enum class CombineMode { min_combine, disjoint_combine };

// Splits [0, n) into ceil(n/r) contiguous batches of r records (the last may
// be shorter). One level of splitting suffices; subproblems run one at a time
// so only a single subproblem's state is ever live.
struct BatchPlan {
  uint32_t n;
  uint32_t r;
  CombineMode mode;

  static BatchPlan plan(uint32_t n, uint32_t r, CombineMode mode) {
    if (r < 1 || r > n) throw UsageError("batch size must satisfy 1 <= r <= n");
    return {n, r, mode};
  }

  uint32_t batch_count() const { return (n + r - 1) / r; }
  std::pair<uint32_t, uint32_t> batch(uint32_t i) const {
    return {i * r, std::min(n, (i + 1) * r)};
  }
};

// Decomposable-with-min combine: evaluates solve on every pair union
// B_i u B_j (or on B_1 alone when there is a single batch) and returns the
// minimum under Less. Subproblems run in lexicographic (i, j) order.
template <typename T, typename SolveFn, typename Less>
T run_min(const InputTape& tape, const BatchPlan& plan, SolveFn&& solve, Less&& less) {
  const uint32_t nb = plan.batch_count();
  if (nb == 1) return solve(TapeView(tape, 0, plan.n));
  bool have = false;
  T best{};
  for (uint32_t i = 0; i < nb; ++i) {
    for (uint32_t j = i + 1; j < nb; ++j) {
      auto [alo, ahi] = plan.batch(i);
      auto [blo, bhi] = plan.batch(j);
      T cur = solve(TapeView(tape, alo, ahi, blo, bhi));
      if (!have || less(cur, best)) {
        best = cur;
        have = true;
      }
    }
  }
  return best;
}

// Disjoint combine: within-batch solves first (all i), then cross solves for
// every pair i < j. solve_cross must report only cross-batch interactions.
template <typename WithinFn, typename CrossFn>
void run_disjoint(const InputTape& tape, const BatchPlan& plan, WithinFn&& solve_within,
                  CrossFn&& solve_cross) {
  const uint32_t nb = plan.batch_count();
  for (uint32_t i = 0; i < nb; ++i) {
    auto [lo, hi] = plan.batch(i);
    solve_within(TapeView(tape, lo, hi));
  }
  for (uint32_t i = 0; i < nb; ++i) {
    for (uint32_t j = i + 1; j < nb; ++j) {
      auto [alo, ahi] = plan.batch(i);
      auto [blo, bhi] = plan.batch(j);
      solve_cross(TapeView(tape, alo, ahi, blo, bhi));
    }
  }
}

}  // namespace sweepspace
