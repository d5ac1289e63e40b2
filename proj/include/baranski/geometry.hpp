#pragma once

#include <cstddef>
#include <string>

#include "baranski/carpet.hpp"
#include "baranski/offset.hpp"
#include "baranski/rational.hpp"
#include "baranski/word.hpp"

namespace baranski {

/// Greatest fixed point over the nine offsets: b survives iff some digit pair
/// (d, d') sends it to a surviving b' = (n·bx + d'x − dx, m·by + d'y − dy).
IntersectionOracle build_oracle(const CarpetSpec& spec);

struct ProjectedPoint {
    Rational x;
    Rational y;
    /// Per-coordinate distance to the true projection is at most this.
    Rational errorBound;
};

/// φ_{x1}∘…∘φ_{x_depth}(0, 0) using the carpet's own contraction ratios.
ProjectedPoint project(const CarpetSpec& spec, const PeriodicWord& word, int depth);

/// Largest / smallest contraction ratio among the maps of the digit set.
Rational max_ratio(const CarpetSpec& spec);
Rational min_ratio(const CarpetSpec& spec);

struct SvgOptions {
    std::string fill = "#1b4f72";
    std::size_t cap = 1'000'000;
    int pixels = 800;
};

std::string render_svg(const CarpetSpec& spec, int depth, const SvgOptions& options = {});

}  // namespace baranski
