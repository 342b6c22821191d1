#pragma once

#include <cstdint>
#include <functional>

#include "sweepspace/closest.hpp"
#include "sweepspace/oracle.hpp"
#include "sweepspace/tape.hpp"

namespace sweepspace {

using CrossSink = std::function<void(const CrossRecord&)>;

// Enumerates every intersecting segment pair exactly once under an s-bit
// workspace: batches of r = s / lg s segments, an in-core x-sweep per batch,
// and a bichromatic x-sweep per batch pair. Returns the number of pairs.
uint64_t segx_enumerate(const InputTape& tape, uint64_t s, const CrossSink& sink,
                        RunStats* stats = nullptr);

// Counting sink variant (no result storage).
uint64_t segx_count(const InputTape& tape, uint64_t s, RunStats* stats = nullptr);

}  // namespace sweepspace
