#include "baranski/geometry.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "baranski/error.hpp"

namespace baranski {

std::string OffsetVector::name() const {
    if (is_zero()) return "0";
    std::string s;
    if (bx != 0) s += bx > 0 ? "e1" : "-e1";
    if (by != 0) {
        if (by > 0) s += s.empty() ? "e2" : "+e2";
        else s += "-e2";
    }
    return s;
}

IntersectionOracle build_oracle(const CarpetSpec& spec) {
    // Every offset b' reachable from b in one refinement step, as indices.
    std::vector<std::vector<int>> successors(OffsetVector::kCount);
    for (int idx = 0; idx < OffsetVector::kCount; ++idx) {
        const auto b = OffsetVector::from_index(idx);
        auto& out = successors[static_cast<std::size_t>(idx)];
        for (const auto& d : spec.digits())
            for (const auto& e : spec.digits()) {
                const OffsetVector next{spec.n() * b.bx + e.x - d.x, spec.m() * b.by + e.y - d.y};
                if (next.in_box()) out.push_back(next.index());
            }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    std::bitset<OffsetVector::kCount> alive;
    alive.set();
    for (bool changed = true; changed;) {
        changed = false;
        for (int idx = 0; idx < OffsetVector::kCount; ++idx) {
            if (!alive.test(static_cast<std::size_t>(idx))) continue;
            const auto& out = successors[static_cast<std::size_t>(idx)];
            const bool keep = std::any_of(out.begin(), out.end(),
                                          [&](int j) { return alive.test(static_cast<std::size_t>(j)); });
            if (!keep) {
                alive.reset(static_cast<std::size_t>(idx));
                changed = true;
            }
        }
    }
    return IntersectionOracle(alive);
}

Rational max_ratio(const CarpetSpec& spec) {
    Rational best = 0;
    for (const auto& d : spec.digits()) {
        best = std::max(best, spec.column_ratio(d.x));
        best = std::max(best, spec.row_ratio(d.y));
    }
    return best;
}

Rational min_ratio(const CarpetSpec& spec) {
    Rational best = 1;
    for (const auto& d : spec.digits()) {
        best = std::min(best, spec.column_ratio(d.x));
        best = std::min(best, spec.row_ratio(d.y));
    }
    return best;
}

ProjectedPoint project(const CarpetSpec& spec, const PeriodicWord& word, int depth) {
    if (depth < 1) throw Error(Errc::InvalidArgument, "projection depth must be >= 1");
    if (word.max_letter() > spec.size())
        throw Error(Errc::OutOfRange, "word " + word.str() + " uses letters outside the alphabet");
    Rational x = 0, y = 0;
    for (int k = depth - 1; k >= 0; --k) {
        const auto& d = spec.digit(word.at(static_cast<std::size_t>(k)));
        x = spec.column_offset(d.x) + spec.column_ratio(d.x) * x;
        y = spec.row_offset(d.y) + spec.row_ratio(d.y) * y;
    }
    Rational bound = 1;
    const Rational r = max_ratio(spec);
    for (int k = 0; k < depth; ++k) bound *= r;
    return {std::move(x), std::move(y), std::move(bound)};
}

std::string render_svg(const CarpetSpec& spec, int depth, const SvgOptions& options) {
    if (depth < 1) throw Error(Errc::InvalidArgument, "render depth must be >= 1");
    std::size_t count = 1;
    for (int k = 0; k < depth; ++k) {
        if (count > options.cap / static_cast<std::size_t>(spec.size()))
            throw Error(Errc::CapExceeded, "N^depth exceeds the rectangle cap of " + std::to_string(options.cap));
        count *= static_cast<std::size_t>(spec.size());
    }

    struct Map {
        double ox, oy, sx, sy;
    };
    std::vector<Map> maps;
    for (const auto& d : spec.digits())
        maps.push_back({to_double(spec.column_offset(d.x)), to_double(spec.row_offset(d.y)),
                        to_double(spec.column_ratio(d.x)), to_double(spec.row_ratio(d.y))});

    const double px = options.pixels;
    std::ostringstream out;
    out << std::setprecision(10);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.pixels
        << "\" height=\"" << options.pixels << "\" viewBox=\"0 0 " << options.pixels << ' ' << options.pixels
        << "\">\n"
        << "<g fill=\"" << options.fill << "\" stroke=\"none\">\n";

    // Depth-first over Σ^depth; each frame holds the accumulated map φ_I.
    std::vector<Map> stack{{0.0, 0.0, 1.0, 1.0}};
    std::vector<std::size_t> choice{0};
    while (!stack.empty()) {
        if (stack.size() == static_cast<std::size_t>(depth) + 1) {
            const Map& r = stack.back();
            out << "<rect x=\"" << r.ox * px << "\" y=\"" << (1.0 - r.oy - r.sy) * px << "\" width=\""
                << r.sx * px << "\" height=\"" << r.sy * px << "\"/>\n";
            stack.pop_back();
            choice.pop_back();
            continue;
        }
        auto& next = choice.back();
        if (next == maps.size()) {
            stack.pop_back();
            choice.pop_back();
            continue;
        }
        const Map& parent = stack.back();
        const Map& f = maps[next++];
        stack.push_back({parent.ox + parent.sx * f.ox, parent.oy + parent.sy * f.oy, parent.sx * f.sx,
                         parent.sy * f.sy});
        choice.push_back(0);
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace baranski
