#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "baranski/automaton.hpp"
#include "baranski/carpet.hpp"
#include "baranski/cross.hpp"
#include "baranski/word.hpp"

namespace baranski {

/// (E-block index, F-block index) into h_blocks(E) and h_blocks(F).
using BlockMatching = std::vector<std::pair<std::size_t, std::size_t>>;

struct LetterBijection {
    /// map[a − 1] = h(a).
    std::vector<Letter> map;
    BlockMatching blockMatching;

    Letter operator()(Letter a) const { return map.at(static_cast<std::size_t>(a - 1)); }
};

/// Pairs first (left with left, right with right, ordered by sizes then
/// row), then the remaining blocks ordered by (size, row, first column).
/// Throws InvalidArgument when the H-block profiles differ.
BlockMatching match_blocks(const CarpetSpec& e, const CarpetSpec& f);

/// Sends the j-th letter of each E-block to the j-th letter of its matched
/// F-block, then checks that horizontal adjacency and the e1 self-loops are
/// preserved in both directions. Throws InvalidArgument on a malformed
/// matching and PreservationFailure on a broken relation.
LetterBijection build_letter_bijection(const CarpetSpec& e, const CarpetSpec& f, const BlockMatching& matching);

struct IsometryMismatch {
    PeriodicWord x;
    PeriodicWord y;
    SurvivingTime tE;
    SurvivingTime tF;
};

struct IsometryReport {
    std::uint64_t checked = 0;
    std::uint64_t mismatchCount = 0;
    /// First few mismatches only.
    std::vector<IsometryMismatch> mismatches;

    bool ok() const { return mismatchCount == 0; }
};

/// T_E(x, y) = T_F(h(x), h(y)) on each sampled pair.
IsometryReport isometry_check(const SigmaAutomaton& finalE, const SigmaAutomaton& finalF, const LetterBijection& h,
                              const std::vector<std::pair<PeriodicWord, PeriodicWord>>& samples);

/// The same identity on every pair of words u·a^∞, v·b^∞ with |u| = |v| =
/// stemLength and all tail letters a, b, by a joint walk that stops a
/// branch as soon as both itineraries have exited.
IsometryReport isometry_check_exhaustive(const SigmaAutomaton& finalE, const SigmaAutomaton& finalF,
                                         const LetterBijection& h, int stemLength);

/// The automaton the equivalence argument compares: the final
/// simplification for a top-isolated carpet with vertical contacts, the
/// topology automaton itself for a vertically separated one.
CrossAutomaton final_automaton(const CarpetSpec& spec);

enum class EquivalenceStatus { HolderEquivalent, LipschitzEquivalent, Inconclusive };

const char* equivalence_status_name(EquivalenceStatus s);

struct HypothesisRecord {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct EquivalenceVerdict {
    EquivalenceStatus status = EquivalenceStatus::Inconclusive;
    std::vector<HypothesisRecord> hypotheses;
    std::optional<LetterBijection> certificate;
    std::optional<IsometryReport> isometry;
};

struct EquivalenceOptions {
    int isometryStemLength = 5;
};

/// Sufficient condition only: a failed hypothesis gives Inconclusive, never
/// a claim of non-equivalence.
EquivalenceVerdict decide_equivalence(const CarpetSpec& e, const CarpetSpec& f, const EquivalenceOptions& options = {});

nlohmann::json to_json(const LetterBijection& h);
nlohmann::json to_json(const IsometryReport& report);
nlohmann::json to_json(const EquivalenceVerdict& verdict);

}  // namespace baranski
