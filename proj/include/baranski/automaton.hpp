#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "baranski/carpet.hpp"
#include "baranski/offset.hpp"
#include "baranski/word.hpp"

namespace baranski {

/// Id, Exit, or a nonzero relative offset. Encoded in one byte: offset
/// indices 0..8 (the zero offset, index 4, is Id) and 9 for Exit.
class State {
public:
    static constexpr int kCount = 10;
    static constexpr std::uint8_t kIdCode = 4;
    static constexpr std::uint8_t kExitCode = 9;

    constexpr State() = default;
    static constexpr State id() { return State(kIdCode); }
    static constexpr State exit() { return State(kExitCode); }
    static State offset(OffsetVector b);
    static constexpr State from_code(std::uint8_t code) { return State(code); }
    /// "Id", "Exit", "e1", "-e2", "e1+e2", ...
    static State parse(std::string_view name);

    constexpr bool is_id() const { return code_ == kIdCode; }
    constexpr bool is_exit() const { return code_ == kExitCode; }
    constexpr bool is_offset() const { return !is_id() && !is_exit(); }
    constexpr std::uint8_t code() const { return code_; }
    /// Id maps to the zero vector; meaningless for Exit.
    OffsetVector vector() const { return OffsetVector::from_index(code_); }

    /// −Id = Id, −Exit = Exit, −Offset(b) = Offset(−b).
    constexpr State mirror() const { return is_exit() ? *this : State(static_cast<std::uint8_t>(8 - code_)); }

    std::string name() const;

    constexpr auto operator<=>(const State&) const = default;

private:
    constexpr explicit State(std::uint8_t code) : code_(code) {}
    std::uint8_t code_ = kIdCode;
};

/// Deterministic display order: Id, Exit, ±e1, ±e2, ±(e1+e2), ±(e1−e2).
const std::array<State, State::kCount>& canonical_state_order();

/// Σ-automaton with a dense transition table. Rows of states outside the
/// state set behave as all-Exit; Exit is absorbing.
class SigmaAutomaton {
public:
    class Builder {
    public:
        /// Starts with δ(Id,(i,i)) = Id and every other entry Exit.
        explicit Builder(int alphabet_size);

        Builder& set(State from, Letter i, Letter j, State to);
        /// Keeps a state in an unpruned build even if no entry mentions it.
        Builder& declare(State s);
        State get(State from, Letter i, Letter j) const;
        int alphabet_size() const { return n_; }

        /// Validates the Σ-automaton axioms. With prune set, states not
        /// reachable from Id are dropped (their rows become Exit); otherwise
        /// the state set is every declared state, target, or state with a
        /// non-Exit row.
        SigmaAutomaton build(bool prune = true) const;

    private:
        int n_;
        std::bitset<State::kCount> declared_;
        std::vector<std::uint8_t> table_;
    };

    int alphabet_size() const { return n_; }
    bool has_state(State s) const { return present_.test(s.code()); }
    /// Present states in canonical order, Id and Exit included.
    std::vector<State> states() const;
    /// Number of present states other than Exit.
    int live_state_count() const { return static_cast<int>(present_.count()) - 1; }

    State step(State from, Letter i, Letter j) const {
        if (from.is_exit()) return from;
        return State::from_code(table_[index(from.code(), i, j)]);
    }

    bool operator==(const SigmaAutomaton&) const = default;

private:
    SigmaAutomaton() = default;
    std::size_t index(std::uint8_t code, Letter i, Letter j) const {
        return (static_cast<std::size_t>(code) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1)) *
                   static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::bitset<State::kCount> present_;
    std::vector<std::uint8_t> table_;
};

/// Joint descent of two cylinders of the companion carpet, tracked by their
/// relative offset.
SigmaAutomaton build_topology_automaton(const CarpetSpec& spec, const IntersectionOracle& oracle);

/// Supremum of k with S_k ≠ Exit along the itinerary from Id.
SurvivingTime surviving_time(const SigmaAutomaton& machine, WordView x, WordView y);
SurvivingTime surviving_time(const SigmaAutomaton& machine, const PeriodicWord& x, const PeriodicWord& y);

struct WordTriple {
    PeriodicWord x;
    PeriodicWord y;
    PeriodicWord z;
};

struct FeasibilityViolation {
    WordTriple triple;
    SurvivingTime txy;
    SurvivingTime txz;
    SurvivingTime tyz;
};

/// Every sampled triple with min{T(x,y), T(x,z)} > T(y,z) + slack.
std::vector<FeasibilityViolation> check_feasibility(const SigmaAutomaton& machine, int slack,
                                                    const std::vector<WordTriple>& samples);

/// True iff δ(S,(i,j)) = −δ(−S,(j,i)) for every live state S and letters i, j.
bool mirror_check(const SigmaAutomaton& machine);

struct DotOptions {
    bool showExit = false;
};

std::string to_dot(const SigmaAutomaton& machine, const DotOptions& options = {});

/// {"N", "states", "delta": {"S|i,j": "T"}}; entries leading to Exit are
/// omitted, as are the implied Id self-loops on (i,i).
nlohmann::json automaton_to_json(const SigmaAutomaton& machine);
SigmaAutomaton automaton_from_json(const nlohmann::json& doc);

}  // namespace baranski
