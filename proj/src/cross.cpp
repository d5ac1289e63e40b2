#include "baranski/cross.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "baranski/error.hpp"
#include "baranski/geometry.hpp"

namespace baranski {

namespace {

const State kE1 = State::offset({1, 0});
const State kE2 = State::offset({0, 1});

PairSet transpose(const PairSet& p) {
    PairSet out;
    for (const auto& [i, j] : p) out.emplace(j, i);
    return out;
}

std::string pair_str(const LetterPair& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

void check_letters(const PairSet& p, int n, const char* which) {
    for (const auto& [i, j] : p)
        if (i < 1 || i > n || j < 1 || j > n)
            throw Error(Errc::OutOfRange, std::string(which) + " pair " + pair_str({i, j}) +
                                              " uses letters outside 1.." + std::to_string(n));
}

/// Partners of each letter under a relation, indexed by letter − 1.
using PartnerTable = std::vector<std::vector<Letter>>;

PartnerTable partners(const PairSet& p, int n) {
    PartnerTable out(static_cast<std::size_t>(n));
    for (const auto& [i, j] : p) out[static_cast<std::size_t>(i - 1)].push_back(j);
    return out;
}

struct LoopState {
    const char* name;
    PartnerTable entry;
    PartnerTable loop;
};

std::vector<LoopState> loop_states(const CrossAutomaton& c) {
    const int n = c.alphabet_size();
    return {
        {"e1", partners(c.ph(), n), partners(c.pe1(), n)},
        {"-e1", partners(transpose(c.ph()), n), partners(transpose(c.pe1()), n)},
        {"e2", partners(c.pv(), n), partners(c.pe2(), n)},
        {"-e2", partners(transpose(c.pv()), n), partners(transpose(c.pe2()), n)},
    };
}

}  // namespace

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::H: return "PH";
        case Relation::V: return "PV";
        case Relation::E1: return "Pe1";
        case Relation::E2: return "Pe2";
    }
    return "?";
}

CrossAutomaton CrossAutomaton::make(int alphabet_size, PairSet ph, PairSet pv, PairSet pe1, PairSet pe2) {
    if (alphabet_size < 1) throw Error(Errc::InvalidArgument, "alphabet must contain at least one letter");
    check_letters(ph, alphabet_size, "PH");
    check_letters(pv, alphabet_size, "PV");
    check_letters(pe1, alphabet_size, "Pe1");
    check_letters(pe2, alphabet_size, "Pe2");
    CrossAutomaton c;
    c.n_ = alphabet_size;
    c.ph_ = std::move(ph);
    c.pv_ = std::move(pv);
    c.pe1_ = std::move(pe1);
    c.pe2_ = std::move(pe2);
    return c;
}

const PairSet& CrossAutomaton::relation(Relation r) const {
    switch (r) {
        case Relation::H: return ph_;
        case Relation::V: return pv_;
        case Relation::E1: return pe1_;
        case Relation::E2: return pe2_;
    }
    throw Error(Errc::InvalidArgument, "unknown relation");
}

CrossAutomaton CrossAutomaton::with_pv(PairSet pv) const {
    return make(n_, ph_, std::move(pv), pe1_, pe2_);
}

SigmaAutomaton CrossAutomaton::induced() const {
    SigmaAutomaton::Builder b(n_);
    for (const auto& s : {kE1, kE1.mirror(), kE2, kE2.mirror()}) b.declare(s);

    auto enter = [&](const PairSet& rel, State to, const char* which) {
        for (const auto& [i, j] : rel) {
            if (i == j)
                throw Error(Errc::InvalidCrossAutomaton,
                            std::string(which) + " contains the diagonal pair " + pair_str({i, j}));
            for (const auto& [a, c, s] : {std::tuple{i, j, to}, std::tuple{j, i, to.mirror()}}) {
                const State current = b.get(State::id(), a, c);
                if (!current.is_exit() && current != s)
                    throw Error(Errc::InvalidCrossAutomaton, "input " + pair_str({a, c}) + " from Id leads to both " +
                                                                 current.name() + " and " + s.name());
                b.set(State::id(), a, c, s);
            }
        }
    };
    enter(ph_, kE1, "PH");
    enter(pv_, kE2, "PV");
    for (const auto& [i, j] : pe1_) {
        b.set(kE1, i, j, kE1);
        b.set(kE1.mirror(), j, i, kE1.mirror());
    }
    for (const auto& [i, j] : pe2_) {
        b.set(kE2, i, j, kE2);
        b.set(kE2.mirror(), j, i, kE2.mirror());
    }
    return b.build(false);
}

CrossAutomaton from_topology_automaton(const SigmaAutomaton& machine) {
    for (const auto& s : machine.states())
        if (s.is_offset() && s.vector().is_diagonal())
            throw Error(Errc::DiagonalStatePresent,
                        "diagonal state " + s.name() + " is reachable; cylinders meet at corners");
    const int n = machine.alphabet_size();
    PairSet ph, pv, pe1, pe2;
    for (Letter i = 1; i <= n; ++i)
        for (Letter j = 1; j <= n; ++j) {
            if (machine.step(State::id(), i, j) == kE1) ph.emplace(i, j);
            if (machine.step(State::id(), i, j) == kE2) pv.emplace(i, j);
            if (machine.has_state(kE1) && machine.step(kE1, i, j) == kE1) pe1.emplace(i, j);
            if (machine.has_state(kE2) && machine.step(kE2, i, j) == kE2) pe2.emplace(i, j);
        }
    auto cross = CrossAutomaton::make(n, std::move(ph), std::move(pv), std::move(pe1), std::move(pe2));
    const auto rebuilt = cross.induced();
    for (const auto& s : machine.states()) {
        if (s.is_exit()) continue;
        for (Letter i = 1; i <= n; ++i)
            for (Letter j = 1; j <= n; ++j)
                if (machine.step(s, i, j) != rebuilt.step(s, i, j))
                    throw Error(Errc::InvalidCrossAutomaton, "transition " + s.name() + " on " + pair_str({i, j}) +
                                                                 " is not of cross-automaton shape");
    }
    return cross;
}

TripleCodingResult decide_triple_coding_free(const CrossAutomaton& cross) {
    const int n = cross.alphabet_size();
    const auto states = loop_states(cross);
    auto at = [](const PartnerTable& t, Letter a) -> const std::vector<Letter>& {
        return t[static_cast<std::size_t>(a - 1)];
    };
    auto word = [](Word pre, Letter tail) { return PeriodicWord(std::move(pre), {tail}); };

    for (const auto& s : states)
        for (const auto& s2 : states) {
            // A shared tail letter d that loops in both states.
            for (Letter d = 1; d <= n; ++d) {
                const auto& ld = at(s.loop, d);
                const auto& ld2 = at(s2.loop, d);
                if (ld.empty() || ld2.empty()) continue;
                // Branching at the same position.
                for (Letter a = 1; a <= n; ++a)
                    for (Letter b : at(s.entry, a))
                        for (Letter b2 : at(s2.entry, a))
                            for (Letter p : ld)
                                for (Letter p2 : ld2)
                                    if (b != b2 || p != p2)
                                        return {false, WordTriple{word({a}, d), word({b}, p), word({b2}, p2)}};
                // Staggered: y leaves x first, z leaves one step later.
                for (Letter a = 1; a <= n; ++a)
                    for (Letter b : at(s.entry, a))
                        for (Letter c = 1; c <= n; ++c) {
                            const auto& lc = at(s.loop, c);
                            const auto& ec = at(s2.entry, c);
                            if (lc.empty() || ec.empty()) continue;
                            return {false, WordTriple{word({a, c}, d), word({b, lc.front()}, ld.front()),
                                                      word({a, ec.front()}, ld2.front())}};
                        }
            }
        }
    return {true, std::nullopt};
}

CrossValidation validate(const CrossAutomaton& cross) {
    CrossValidation out;
    try {
        (void)cross.induced();
    } catch (const Error& e) {
        out.wellDefined = false;
        out.problems.emplace_back(e.what());
    }
    for (const auto r : {Relation::H, Relation::V, Relation::E1, Relation::E2}) {
        const RelationGraph g = relation_graph(cross, r);
        for (Letter v = 1; v <= cross.alphabet_size(); ++v) {
            if (g.out_degree(v) > 1) {
                out.unique = false;
                out.problems.push_back(std::string(relation_name(r)) + ": letter " + std::to_string(v) +
                                       " has several successors");
            }
            if (g.in_degree(v) > 1) {
                out.unique = false;
                out.problems.push_back(std::string(relation_name(r)) + ": letter " + std::to_string(v) +
                                       " has several predecessors");
            }
        }
    }
    const auto tcf = decide_triple_coding_free(cross);
    if (!tcf.free) {
        out.tripleCodingFree = false;
        out.witness = tcf.witness;
        out.problems.push_back("triple coding: " + tcf.witness->x.str() + " has infinite surviving time with both " +
                               tcf.witness->y.str() + " and " + tcf.witness->z.str());
    }
    return out;
}

void require_valid(const CrossAutomaton& cross) {
    const auto v = validate(cross);
    if (v.ok()) return;
    std::string msg = "not a cross automaton:";
    for (const auto& p : v.problems) msg += " " + p + ";";
    throw Error(Errc::InvalidCrossAutomaton, msg);
}

RelationGraph::RelationGraph(int vertex_count, const PairSet& edges)
    : n_(vertex_count), out_(static_cast<std::size_t>(vertex_count)), in_(static_cast<std::size_t>(vertex_count)) {
    for (const auto& [u, v] : edges) {
        out_.at(idx(u)).push_back(v);
        in_.at(idx(v)).push_back(u);
    }
}

bool RelationGraph::has_cycle() const {
    // Kahn's algorithm: a cycle remains iff some vertex is never freed.
    std::vector<int> indeg(static_cast<std::size_t>(n_));
    std::vector<Letter> ready;
    for (Letter v = 1; v <= n_; ++v) {
        indeg[idx(v)] = in_degree(v);
        if (indeg[idx(v)] == 0) ready.push_back(v);
    }
    int freed = 0;
    while (!ready.empty()) {
        const Letter v = ready.back();
        ready.pop_back();
        ++freed;
        for (Letter w : successors(v))
            if (--indeg[idx(w)] == 0) ready.push_back(w);
    }
    return freed != n_;
}

RelationGraph relation_graph(const CrossAutomaton& cross, Relation which) {
    return RelationGraph(cross.alphabet_size(), cross.relation(which));
}

const char* cross_class_name(CrossClass c) {
    switch (c) {
        case CrossClass::Class0: return "Class0";
        case CrossClass::Class1: return "Class1";
        case CrossClass::Class2: return "Class2";
        case CrossClass::Unclassified: return "Unclassified";
    }
    return "?";
}

Classification classify(const CrossAutomaton& cross, const CarpetSpec* origin) {
    Classification out;
    auto fail = [&](std::string reason, std::string detail) {
        out.kind = CrossClass::Unclassified;
        out.reason = std::move(reason);
        out.detail = std::move(detail);
        return out;
    };

    const auto validation = validate(cross);
    if (!validation.ok())
        return fail("invalid-cross-automaton", validation.problems.empty() ? "" : validation.problems.front());
    if (cross.pv().empty()) {
        out.kind = CrossClass::Class0;
        return out;
    }

    if (cross.pe2().size() != 1 || cross.pe2().begin()->first == cross.pe2().begin()->second)
        return fail("e2-loop-not-singleton",
                    "Pe2 has " + std::to_string(cross.pe2().size()) + " pairs; exactly one (top, bottom) is required");
    const auto [gamma, lambda] = *cross.pe2().begin();

    for (const auto r : {Relation::H, Relation::V, Relation::E1})
        if (!relation_graph(cross, r).is_isolated(gamma))
            return fail("top-not-isolated",
                        "letter " + std::to_string(gamma) + " has an edge in " + relation_name(r));

    const auto machine = cross.induced();
    const int n = cross.alphabet_size();
    for (Letter t1 = 1; t1 <= n; ++t1) {
        if (t1 == lambda) continue;
        for (Letter t2 = 1; t2 <= n; ++t2) {
            const State fwd = machine.step(machine.step(State::id(), lambda, t1), lambda, t2);
            const State bwd = machine.step(machine.step(State::id(), t1, lambda), t2, lambda);
            if (!fwd.is_exit() || !bwd.is_exit())
                return fail("bottom-escape", "inputs built from " + std::to_string(lambda) + std::to_string(lambda) +
                                                 " and " + std::to_string(t1) + std::to_string(t2) +
                                                 " survive two steps");
        }
    }

    if (relation_graph(cross, Relation::V).has_cycle()) return fail("vertical-cycle", "PV has a directed cycle");

    out.kind = CrossClass::Class2;
    out.gamma = gamma;
    out.lambda = lambda;
    if (origin) {
        const auto cond = check_conditions(*origin);
        if (cond.topIsolated && cond.crossIntersection && !cond.verticalSeparation) {
            try {
                if (from_topology_automaton(build_topology_automaton(*origin, build_oracle(*origin))) == cross)
                    out.kind = CrossClass::Class1;
                else
                    out.detail = "origin carpet has a different topology automaton";
            } catch (const Error& e) {
                out.detail = e.what();
            }
        } else {
            out.detail = "origin carpet is not top isolated with vertical contacts";
        }
    }
    return out;
}

namespace {

nlohmann::json pairs_json(const PairSet& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [i, j] : p) arr.push_back({i, j});
    return arr;
}

PairSet pairs_from(const nlohmann::json& doc, const char* key) {
    PairSet out;
    if (!doc.contains(key)) return out;
    for (const auto& item : doc.at(key)) {
        if (!item.is_array() || item.size() != 2)
            throw Error(Errc::Parse, std::string(key) + " entries must be [i, j] pairs");
        out.emplace(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

}  // namespace

nlohmann::json cross_to_json(const CrossAutomaton& cross) {
    return {{"N", cross.alphabet_size()},
            {"PH", pairs_json(cross.ph())},
            {"PV", pairs_json(cross.pv())},
            {"Pe1", pairs_json(cross.pe1())},
            {"Pe2", pairs_json(cross.pe2())}};
}

CrossAutomaton cross_from_json(const nlohmann::json& doc) {
    try {
        return CrossAutomaton::make(doc.at("N").get<int>(), pairs_from(doc, "PH"), pairs_from(doc, "PV"),
                                    pairs_from(doc, "Pe1"), pairs_from(doc, "Pe2"));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("cross automaton JSON: ") + e.what());
    }
}

nlohmann::json to_json(const Classification& c) {
    nlohmann::json doc{{"class", cross_class_name(c.kind)}};
    if (c.gamma) doc["gamma"] = *c.gamma;
    if (c.lambda) doc["lambda"] = *c.lambda;
    if (!c.reason.empty()) doc["reason"] = c.reason;
    if (!c.detail.empty()) doc["detail"] = c.detail;
    return doc;
}

nlohmann::json to_json(const WordTriple& t) { return {t.x.str(), t.y.str(), t.z.str()}; }

}  // namespace baranski
