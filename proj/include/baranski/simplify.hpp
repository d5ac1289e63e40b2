#pragma once

#include <vector>

#include <json.hpp>

#include "baranski/cross.hpp"

namespace baranski {

/// Deletion of one vertical edge (τ, κ) whose head κ has no outgoing
/// vertical edge. All other relations are kept.
struct SimplificationStep {
    CrossAutomaton before;
    CrossAutomaton after;
    LetterPair deleted;  // (τ, κ)
    Letter gamma = 0;
    Letter lambda = 0;
    /// False when γ, λ, κ are not distinct or τ ∈ {γ, κ}: the symbolic map
    /// g has no context for this step.
    bool gSupported = true;

    Letter tau() const { return deleted.first; }
    Letter kappa() const { return deleted.second; }
};

struct SimplificationChain {
    CrossAutomaton start;
    std::vector<SimplificationStep> steps;

    /// M* — the start itself when there are no steps.
    const CrossAutomaton& final_automaton() const { return steps.empty() ? start : steps.back().after; }
};

/// Picks the smallest V-maximal κ with an incoming vertical edge, then the
/// smallest τ. Throws NotClass2 unless the input is of Class 2.
SimplificationStep one_step(const CrossAutomaton& cross);

/// Repeats one_step until P_V is empty. A Class 0 input gives an empty chain.
SimplificationChain final_chain(const CrossAutomaton& cross);

nlohmann::json to_json(const SimplificationStep& step);
nlohmann::json to_json(const SimplificationChain& chain);

}  // namespace baranski
