#pragma once

#include <bitset>

#include "baranski/carpet.hpp"
#include "baranski/cross.hpp"
#include "baranski/offset.hpp"

namespace baranski::testing {

/// Offsets b from which a chain of `steps` refinement steps stays inside the
/// box, found by forward iteration of reachable offset sets. With nine
/// offsets, nine steps force a repeated offset and hence an infinite chain.
std::bitset<OffsetVector::kCount> chain_survivors(const CarpetSpec& spec, int steps = 9);

/// Offsets b for which the depth-k cell approximations of K and K + b share
/// a point. Only cells touching [0,1]² ∩ ([0,1]² + b) are generated.
std::bitset<OffsetVector::kCount> raster_survivors(const CarpetSpec& spec, int depth = 9);

/// Searches every word with preperiod ≤ 2 and a one-letter period for a word
/// with two distinct partners at infinite surviving time.
bool brute_force_triple_coding_free(const CrossAutomaton& cross);

}  // namespace baranski::testing
