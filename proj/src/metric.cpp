#include "baranski/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "baranski/error.hpp"
#include "baranski/geometry.hpp"

namespace baranski {

PseudoDistance rho(const SigmaAutomaton& machine, double xi, const PeriodicWord& x, const PeriodicWord& y) {
    if (!(xi > 0.0 && xi < 1.0)) throw Error(Errc::InvalidArgument, "xi must lie strictly between 0 and 1");
    const auto t = surviving_time(machine, x, y);
    return {t.is_infinite() ? 0.0 : std::pow(xi, static_cast<double>(t.value())), t};
}

HolderScale holder_scale(const CarpetSpec& spec) {
    HolderScale h;
    h.rStar = max_ratio(spec);
    h.rSub = min_ratio(spec);
    const double big = to_double(h.rStar), small = to_double(h.rSub);
    h.s = h.rStar == h.rSub ? 1.0 : std::sqrt(std::log(big) / std::log(small));
    h.xi = std::pow(small, h.s);
    return h;
}

ProjectionReport check_projection_bounds(const CarpetSpec& spec, const SigmaAutomaton& machine,
                                         const std::vector<std::pair<PeriodicWord, PeriodicWord>>& samples) {
    const auto scale = holder_scale(spec);
    const double rstar = to_double(scale.rStar), rsub = to_double(scale.rSub);

    // Each projected point lies within r*^depth of the true one in both
    // coordinates, so a distance is off by at most 2·√2·r*^depth.
    ProjectionReport report;
    report.depth = 1;
    while (2.0 * std::sqrt(2.0) * std::pow(rstar, report.depth) >= 1e-9) ++report.depth;
    report.epsilon = 2.0 * std::sqrt(2.0) * std::pow(rstar, report.depth);

    double lower = std::numeric_limits<double>::infinity();
    for (const auto& [x, y] : samples) {
        if (x == y) continue;
        ProjectionRecord rec{x, y, surviving_time(machine, x, y)};
        const auto px = project(spec, x, report.depth);
        const auto py = project(spec, y, report.depth);
        const double dx = to_double(Rational(px.x - py.x)), dy = to_double(Rational(px.y - py.y));
        rec.euclidean = std::hypot(dx, dy);
        if (rec.t.is_infinite()) {
            rec.rho = 0.0;
            rec.upperOk = rec.euclidean <= report.epsilon;
        } else {
            const auto t = static_cast<double>(rec.t.value());
            rec.rho = std::pow(scale.xi, t);
            rec.upperOk = rec.euclidean <= 4.0 * std::pow(rstar, t) + report.epsilon;
            lower = std::min(lower, rec.euclidean / std::pow(rsub, t + 1.0));
        }
        if (!rec.upperOk) ++report.violations;
        report.pairs.push_back(std::move(rec));
    }
    report.fittedLowerC = std::isinf(lower) ? 0.0 : lower;
    return report;
}

std::vector<std::vector<PeriodicWord>> quotient_classes(const SigmaAutomaton& machine,
                                                        const std::vector<PeriodicWord>& words) {
    const std::size_t n = words.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const bool same = words[i] == words[j] || surviving_time(machine, words[i], words[j]).is_infinite();
            linked[i][j] = linked[j][i] = same;
            if (same) parent[find(i)] = find(j);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (find(i) == find(j) && !linked[i][j])
                throw Error(Errc::IntransitivitySample, words[i].str() + " and " + words[j].str() +
                                                            " are joined through other words but T is finite");

    std::vector<std::vector<PeriodicWord>> classes;
    std::vector<std::size_t> root_slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = find(i);
        if (root_slot[r] == n) {
            root_slot[r] = classes.size();
            classes.emplace_back();
        }
        auto& cls = classes[root_slot[r]];
        if (std::find(cls.begin(), cls.end(), words[i]) == cls.end()) cls.push_back(words[i]);
    }
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    return classes;
}

nlohmann::json to_json(const ProjectionReport& report) {
    auto pairs = nlohmann::json::array();
    for (const auto& r : report.pairs)
        pairs.push_back({{"x", r.x.str()},
                         {"y", r.y.str()},
                         {"T", r.t.str()},
                         {"rho", r.rho},
                         {"euclidean", r.euclidean},
                         {"upperOk", r.upperOk}});
    return {{"pairs", pairs},
            {"summary",
             {{"depth", report.depth},
              {"epsilon", report.epsilon},
              {"fittedLowerC", report.fittedLowerC},
              {"violations", report.violations}}}};
}

nlohmann::json to_json(const HolderScale& scale) {
    return {{"rStar", to_string(scale.rStar)}, {"rSub", to_string(scale.rSub)}, {"s", scale.s}, {"xi", scale.xi}};
}

}  // namespace baranski
