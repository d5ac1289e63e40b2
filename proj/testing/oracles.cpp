#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "baranski/automaton.hpp"
#include "baranski/word.hpp"

namespace baranski::testing {

std::bitset<OffsetVector::kCount> chain_survivors(const CarpetSpec& spec, int steps) {
    std::bitset<OffsetVector::kCount> out;
    for (int start = 0; start < OffsetVector::kCount; ++start) {
        std::set<std::pair<int, int>> current{{OffsetVector::from_index(start).bx, OffsetVector::from_index(start).by}};
        for (int t = 0; t < steps && !current.empty(); ++t) {
            std::set<std::pair<int, int>> next;
            for (const auto& [bx, by] : current)
                for (const auto& d : spec.digits())
                    for (const auto& e : spec.digits()) {
                        const int x = spec.n() * bx + e.x - d.x, y = spec.m() * by + e.y - d.y;
                        if (x >= -1 && x <= 1 && y >= -1 && y <= 1) next.emplace(x, y);
                    }
            current = std::move(next);
        }
        if (!current.empty()) out.set(static_cast<std::size_t>(start));
    }
    return out;
}

namespace {

using Cell = std::pair<std::int64_t, std::int64_t>;

struct Box {
    std::int64_t x0, x1, y0, y1;
};

/// Depth-`depth` cells of the companion approximation whose closed squares
/// meet the closed box; coordinates are in finest-grid units, where a cell
/// at `level` spans `span` finest cells per axis.
void collect(const CarpetSpec& spec, int depth, int level, Cell cell, std::int64_t span_x, std::int64_t span_y,
             const Box& box, std::vector<Cell>& out) {
    const std::int64_t x0 = cell.first * span_x, y0 = cell.second * span_y;
    if (x0 > box.x1 || x0 + span_x < box.x0 || y0 > box.y1 || y0 + span_y < box.y0) return;
    if (level == depth) {
        out.push_back(cell);
        return;
    }
    for (const auto& d : spec.digits())
        collect(spec, depth, level + 1, {cell.first * spec.n() + d.x, cell.second * spec.m() + d.y},
                span_x / spec.n(), span_y / spec.m(), box, out);
}

}  // namespace

std::bitset<OffsetVector::kCount> raster_survivors(const CarpetSpec& spec, int depth) {
    std::int64_t w = 1, h = 1;
    for (int k = 0; k < depth; ++k) {
        w *= spec.n();
        h *= spec.m();
    }
    std::bitset<OffsetVector::kCount> out;
    for (int idx = 0; idx < OffsetVector::kCount; ++idx) {
        const auto b = OffsetVector::from_index(idx);
        if (b.is_zero()) {
            out.set(static_cast<std::size_t>(idx));
            continue;
        }
        // Lens [0,1]² ∩ ([0,1]² + b) in finest units, for K and for K + b.
        const Box lens{std::max(0, b.bx) * w, std::min(1, 1 + b.bx) * w, std::max(0, b.by) * h,
                       std::min(1, 1 + b.by) * h};
        const Box shifted{lens.x0 - b.bx * w, lens.x1 - b.bx * w, lens.y0 - b.by * h, lens.y1 - b.by * h};
        std::vector<Cell> a, c;
        collect(spec, depth, 0, {0, 0}, w, h, lens, a);
        collect(spec, depth, 0, {0, 0}, w, h, shifted, c);
        std::sort(a.begin(), a.end());
        const bool meet = std::any_of(c.begin(), c.end(), [&](const Cell& cell) {
            const Cell moved{cell.first + b.bx * w, cell.second + b.by * h};
            for (std::int64_t dx = -1; dx <= 1; ++dx)
                for (std::int64_t dy = -1; dy <= 1; ++dy)
                    if (std::binary_search(a.begin(), a.end(), Cell{moved.first + dx, moved.second + dy}))
                        return true;
            return false;
        });
        if (meet) out.set(static_cast<std::size_t>(idx));
    }
    return out;
}

bool brute_force_triple_coding_free(const CrossAutomaton& cross) {
    const int n = cross.alphabet_size();
    std::set<PeriodicWord> unique;
    for (Letter t = 1; t <= n; ++t) {
        unique.insert(PeriodicWord({}, {t}));
        for (Letter a = 1; a <= n; ++a) {
            unique.insert(PeriodicWord({a}, {t}));
            for (Letter b = 1; b <= n; ++b) unique.insert(PeriodicWord({a, b}, {t}));
        }
    }
    const std::vector<PeriodicWord> words(unique.begin(), unique.end());
    const auto machine = cross.induced();
    for (const auto& x : words) {
        int partners = 0;
        for (const auto& y : words)
            if (x != y && surviving_time(machine, x, y).is_infinite() && ++partners >= 2) return false;
    }
    return true;
}

}  // namespace baranski::testing
