#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "baranski/automaton.hpp"
#include "baranski/carpet.hpp"
#include "baranski/rational.hpp"
#include "baranski/word.hpp"

namespace baranski {

struct PseudoDistance {
    double value = 0.0;
    SurvivingTime derivation = SurvivingTime::infinite();
};

/// ξ^T with ξ^∞ = 0. Throws InvalidArgument unless 0 < ξ < 1.
PseudoDistance rho(const SigmaAutomaton& machine, double xi, const PeriodicWord& x, const PeriodicWord& y);

struct HolderScale {
    Rational rStar;  // largest contraction ratio
    Rational rSub;   // smallest contraction ratio
    double s = 1.0;
    double xi = 0.5;
};

HolderScale holder_scale(const CarpetSpec& spec);

struct ProjectionRecord {
    PeriodicWord x;
    PeriodicWord y;
    SurvivingTime t;
    double rho = 0.0;
    double euclidean = 0.0;
    /// Finite T: euclidean ≤ 4·r*^T + ε. Infinite T: euclidean ≤ ε.
    bool upperOk = true;
};

struct ProjectionReport {
    std::vector<ProjectionRecord> pairs;
    int depth = 0;
    /// Bound on the truncation error of a projected distance.
    double epsilon = 0.0;
    /// min over finite-T pairs of euclidean / r_*^(T+1); 0 if there were none.
    double fittedLowerC = 0.0;
    int violations = 0;
};

/// Projects both words at a depth where the truncation error stays below
/// 1e-9 and checks the surviving-time upper bound pair by pair.
ProjectionReport check_projection_bounds(const CarpetSpec& spec, const SigmaAutomaton& machine,
                                         const std::vector<std::pair<PeriodicWord, PeriodicWord>>& samples);

/// Classes of the relation T(x,y) = ∞ on the given words, each sorted, in
/// order of first appearance. Throws IntransitivitySample if the relation
/// fails to be transitive on the sample.
std::vector<std::vector<PeriodicWord>> quotient_classes(const SigmaAutomaton& machine,
                                                        const std::vector<PeriodicWord>& words);

nlohmann::json to_json(const ProjectionReport& report);
nlohmann::json to_json(const HolderScale& scale);

}  // namespace baranski
