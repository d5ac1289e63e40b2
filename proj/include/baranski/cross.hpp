#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "baranski/automaton.hpp"
#include "baranski/carpet.hpp"
#include "baranski/word.hpp"

namespace baranski {

enum class Relation { H, V, E1, E2 };

const char* relation_name(Relation r);

using PairSet = std::set<LetterPair>;

/// A cross automaton is fully described by four relations on Σ: horizontal
/// and vertical neighbours entered from Id, and the self-loops of e1 and e2.
/// The −e1/−e2 rows are the transposes.
class CrossAutomaton {
public:
    /// Checks letters lie in 1..N; the axioms are checked by validate().
    static CrossAutomaton make(int alphabet_size, PairSet ph, PairSet pv, PairSet pe1, PairSet pe2);

    int alphabet_size() const { return n_; }
    const PairSet& ph() const { return ph_; }
    const PairSet& pv() const { return pv_; }
    const PairSet& pe1() const { return pe1_; }
    const PairSet& pe2() const { return pe2_; }
    const PairSet& relation(Relation r) const;

    /// Same automaton with P_V replaced.
    CrossAutomaton with_pv(PairSet pv) const;

    /// The Σ-automaton on {Id, Exit, ±e1, ±e2}. Throws InvalidCrossAutomaton
    /// when two relations claim the same Id input, or a relation holds a
    /// diagonal pair.
    SigmaAutomaton induced() const;

    bool operator==(const CrossAutomaton&) const = default;

private:
    int n_ = 0;
    PairSet ph_, pv_, pe1_, pe2_;
};

/// Reads the four relations off a topology automaton. Throws
/// DiagonalStatePresent if a diagonal offset is reachable and
/// InvalidCrossAutomaton if the table is not of cross shape.
CrossAutomaton from_topology_automaton(const SigmaAutomaton& machine);

struct TripleCodingResult {
    bool free = true;
    /// When not free: distinct x, y, z with T(x,y) = T(x,z) = ∞.
    std::optional<WordTriple> witness;
};

/// Exact decision. Infinite surviving times need an entry into some state
/// followed by loop pairs chosen position by position, so a violation exists
/// iff one exists whose words have preperiod ≤ 2 and a one-letter period.
TripleCodingResult decide_triple_coding_free(const CrossAutomaton& cross);

struct CrossValidation {
    bool wellDefined = true;
    bool unique = true;
    bool tripleCodingFree = true;
    std::vector<std::string> problems;
    std::optional<WordTriple> witness;

    bool ok() const { return wellDefined && unique && tripleCodingFree; }
};

CrossValidation validate(const CrossAutomaton& cross);
/// Throws InvalidCrossAutomaton listing the problems.
void require_valid(const CrossAutomaton& cross);

class RelationGraph {
public:
    RelationGraph(int vertex_count, const PairSet& edges);

    int vertex_count() const { return n_; }
    int out_degree(Letter v) const { return static_cast<int>(out_.at(idx(v)).size()); }
    int in_degree(Letter v) const { return static_cast<int>(in_.at(idx(v)).size()); }
    const std::vector<Letter>& successors(Letter v) const { return out_.at(idx(v)); }
    const std::vector<Letter>& predecessors(Letter v) const { return in_.at(idx(v)); }

    bool is_maximal(Letter v) const { return out_degree(v) == 0; }
    bool is_minimal(Letter v) const { return in_degree(v) == 0; }
    bool is_isolated(Letter v) const { return is_maximal(v) && is_minimal(v); }
    bool has_cycle() const;

private:
    static std::size_t idx(Letter v) { return static_cast<std::size_t>(v - 1); }
    int n_;
    std::vector<std::vector<Letter>> out_;
    std::vector<std::vector<Letter>> in_;
};

RelationGraph relation_graph(const CrossAutomaton& cross, Relation which);

enum class CrossClass { Class0, Class1, Class2, Unclassified };

const char* cross_class_name(CrossClass c);

struct Classification {
    CrossClass kind = CrossClass::Unclassified;
    /// Top and bottom vertices, for Class 1 and Class 2.
    std::optional<Letter> gamma;
    std::optional<Letter> lambda;
    /// Machine-readable: empty when a class was found, otherwise the first
    /// failed requirement ("invalid-cross-automaton", "e2-loop-not-singleton",
    /// "top-not-isolated", "bottom-escape", "vertical-empty",
    /// "vertical-cycle").
    std::string reason;
    std::string detail;
};

/// Class 1 is only reported when the carpet the automaton came from is
/// supplied and is top isolated, cross intersecting and not vertically
/// separated.
Classification classify(const CrossAutomaton& cross, const CarpetSpec* origin = nullptr);

nlohmann::json cross_to_json(const CrossAutomaton& cross);
CrossAutomaton cross_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const WordTriple& t);

}  // namespace baranski
