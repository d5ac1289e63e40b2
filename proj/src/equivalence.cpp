#include "baranski/equivalence.hpp"

#include <algorithm>
#include <tuple>

#include "baranski/error.hpp"
#include "baranski/geometry.hpp"
#include "baranski/simplify.hpp"

namespace baranski {

namespace {

constexpr std::size_t kMismatchSamples = 10;

CrossAutomaton topology_cross(const CarpetSpec& spec) {
    return from_topology_automaton(build_topology_automaton(spec, build_oracle(spec)));
}

/// Indices of blocks taking part in an H-block pair, with their role.
struct PairRoles {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> inPair;
};

PairRoles pair_roles(const std::vector<HBlock>& blocks) {
    PairRoles r{h_block_pairs(blocks), std::vector<bool>(blocks.size(), false)};
    for (const auto& [l, rt] : r.pairs) r.inPair[l] = r.inPair[rt] = true;
    return r;
}

void record(IsometryReport& rep, IsometryMismatch m, std::uint64_t count = 1) {
    rep.mismatchCount += count;
    if (rep.mismatches.size() < kMismatchSamples) rep.mismatches.push_back(std::move(m));
}

}  // namespace

BlockMatching match_blocks(const CarpetSpec& e, const CarpetSpec& f) {
    const auto pe = profile(e), pf = profile(f);
    if (pe.blockSizes != pf.blockSizes || pe.pairSizes != pf.pairSizes)
        throw Error(Errc::InvalidArgument, "H-block profiles differ; no size-preserving block bijection exists");
    const auto be = h_blocks(e), bf = h_blocks(f);
    auto re = pair_roles(be), rf = pair_roles(bf);

    auto pair_key = [](const std::vector<HBlock>& b, const std::pair<std::size_t, std::size_t>& p) {
        return std::tuple(b[p.first].size(), b[p.second].size(), b[p.first].row);
    };
    std::sort(re.pairs.begin(), re.pairs.end(),
              [&](const auto& a, const auto& b) { return pair_key(be, a) < pair_key(be, b); });
    std::sort(rf.pairs.begin(), rf.pairs.end(),
              [&](const auto& a, const auto& b) { return pair_key(bf, a) < pair_key(bf, b); });

    BlockMatching out;
    for (std::size_t k = 0; k < re.pairs.size(); ++k) {
        out.emplace_back(re.pairs[k].first, rf.pairs[k].first);
        out.emplace_back(re.pairs[k].second, rf.pairs[k].second);
    }

    auto free_blocks = [](const std::vector<HBlock>& b, const PairRoles& r) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!r.inPair[i]) idx.push_back(i);
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            return std::tuple(b[x].size(), b[x].row, b[x].firstColumn) <
                   std::tuple(b[y].size(), b[y].row, b[y].firstColumn);
        });
        return idx;
    };
    const auto fe = free_blocks(be, re), ff = free_blocks(bf, rf);
    for (std::size_t k = 0; k < fe.size(); ++k) out.emplace_back(fe[k], ff[k]);
    return out;
}

LetterBijection build_letter_bijection(const CarpetSpec& e, const CarpetSpec& f, const BlockMatching& matching) {
    if (e.size() != f.size())
        throw Error(Errc::InvalidArgument, "alphabets differ in size (" + std::to_string(e.size()) + " vs " +
                                               std::to_string(f.size()) + ")");
    const auto be = h_blocks(e), bf = h_blocks(f);
    const auto re = pair_roles(be), rf = pair_roles(bf);
    std::vector<bool> usedE(be.size(), false), usedF(bf.size(), false);
    LetterBijection h{std::vector<Letter>(static_cast<std::size_t>(e.size()), 0), matching};

    auto pair_role = [](const PairRoles& r, std::size_t i) {
        for (std::size_t k = 0; k < r.pairs.size(); ++k) {
            if (r.pairs[k].first == i) return 1;
            if (r.pairs[k].second == i) return 2;
        }
        return 0;
    };

    for (const auto& [i, j] : matching) {
        if (i >= be.size() || j >= bf.size() || usedE[i] || usedF[j])
            throw Error(Errc::InvalidArgument, "block matching is not a bijection");
        usedE[i] = usedF[j] = true;
        if (be[i].size() != bf[j].size())
            throw Error(Errc::InvalidArgument, "block matching pairs blocks of sizes " +
                                                   std::to_string(be[i].size()) + " and " +
                                                   std::to_string(bf[j].size()));
        if (pair_role(re, i) != pair_role(rf, j))
            throw Error(Errc::InvalidArgument, "block matching does not send H-block pairs to H-block pairs");
        for (std::size_t k = 0; k < be[i].letters.size(); ++k)
            h.map[static_cast<std::size_t>(be[i].letters[k] - 1)] = bf[j].letters[k];
    }
    if (std::count(usedE.begin(), usedE.end(), false) || std::count(usedF.begin(), usedF.end(), false))
        throw Error(Errc::InvalidArgument, "block matching does not cover every block");
    // Pairs must also be matched as pairs, not merely role by role.
    for (const auto& [l, r] : re.pairs) {
        std::size_t fl = 0, fr = 0;
        for (const auto& [i, j] : matching) {
            if (i == l) fl = j;
            if (i == r) fr = j;
        }
        if (std::find(rf.pairs.begin(), rf.pairs.end(), std::pair(fl, fr)) == rf.pairs.end())
            throw Error(Errc::InvalidArgument, "block matching splits an H-block pair");
    }

    const auto ce = topology_cross(e), cf = topology_cross(f);
    for (const auto r : {Relation::H, Relation::E1}) {
        const auto& rel_e = ce.relation(r);
        const auto& rel_f = cf.relation(r);
        for (Letter a = 1; a <= e.size(); ++a)
            for (Letter b = 1; b <= e.size(); ++b) {
                const bool in_e = rel_e.count({a, b}) > 0;
                const bool in_f = rel_f.count({h(a), h(b)}) > 0;
                if (in_e != in_f)
                    throw Error(Errc::PreservationFailure,
                                std::string(relation_name(r)) + ": (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") is " + (in_e ? "" : "not ") + "related but its image (" +
                                    std::to_string(h(a)) + "," + std::to_string(h(b)) + ") is " +
                                    (in_f ? "" : "not ") + "related");
            }
    }
    return h;
}

IsometryReport isometry_check(const SigmaAutomaton& finalE, const SigmaAutomaton& finalF, const LetterBijection& h,
                              const std::vector<std::pair<PeriodicWord, PeriodicWord>>& samples) {
    IsometryReport rep;
    for (const auto& [x, y] : samples) {
        const auto te = surviving_time(finalE, x, y);
        const auto tf = surviving_time(finalF, x.map_letters(h.map), y.map_letters(h.map));
        ++rep.checked;
        if (te != tf) record(rep, {x, y, te, tf});
    }
    return rep;
}

IsometryReport isometry_check_exhaustive(const SigmaAutomaton& finalE, const SigmaAutomaton& finalF,
                                         const LetterBijection& h, int stemLength) {
    const int n = finalE.alphabet_size();
    if (finalF.alphabet_size() != n || static_cast<int>(h.map.size()) != n)
        throw Error(Errc::InvalidArgument, "automata and bijection disagree on the alphabet size");
    if (stemLength < 0) throw Error(Errc::InvalidArgument, "stem length must be non-negative");

    IsometryReport rep;
    const auto nn = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    // Word pairs below a node at depth d: (N²)^(L−d) stems times N² tails.
    std::vector<std::uint64_t> below(static_cast<std::size_t>(stemLength) + 2, nn);
    for (int d = stemLength - 1; d >= 0; --d)
        below[static_cast<std::size_t>(d)] = below[static_cast<std::size_t>(d) + 1] * nn;
    const int tail_steps = std::max(finalE.live_state_count(), finalF.live_state_count()) + 1;

    Word px, py;
    auto mismatch = [&](Letter tx, Letter ty, std::uint64_t count) {
        PeriodicWord x(px, {tx}), y(py, {ty});
        const auto te = surviving_time(finalE, x, y);
        const auto tf = surviving_time(finalF, x.map_letters(h.map), y.map_letters(h.map));
        record(rep, {std::move(x), std::move(y), te, tf}, count);
    };

    auto walk = [&](auto&& self, int depth, State se, State sf) -> void {
        if (depth == stemLength) {
            for (Letter tx = 1; tx <= n; ++tx)
                for (Letter ty = 1; ty <= n; ++ty) {
                    ++rep.checked;
                    State a = se, b = sf;
                    for (int k = 0; k < tail_steps; ++k) {
                        a = finalE.step(a, tx, ty);
                        b = finalF.step(b, h(tx), h(ty));
                        if (a.is_exit() != b.is_exit()) {
                            mismatch(tx, ty, 1);
                            break;
                        }
                        if (a.is_exit()) break;
                    }
                }
            return;
        }
        for (Letter i = 1; i <= n; ++i)
            for (Letter j = 1; j <= n; ++j) {
                const State a = finalE.step(se, i, j);
                const State b = finalF.step(sf, h(i), h(j));
                px.push_back(i);
                py.push_back(j);
                if (a.is_exit() != b.is_exit()) {
                    rep.checked += below[static_cast<std::size_t>(depth) + 1];
                    mismatch(1, 1, below[static_cast<std::size_t>(depth) + 1]);
                } else if (a.is_exit()) {
                    rep.checked += below[static_cast<std::size_t>(depth) + 1];
                } else {
                    self(self, depth + 1, a, b);
                }
                px.pop_back();
                py.pop_back();
            }
    };
    walk(walk, 0, State::id(), State::id());
    return rep;
}

CrossAutomaton final_automaton(const CarpetSpec& spec) {
    const auto cross = topology_cross(spec);
    if (cross.pv().empty()) return cross;
    return final_chain(cross).final_automaton();
}

const char* equivalence_status_name(EquivalenceStatus s) {
    switch (s) {
        case EquivalenceStatus::HolderEquivalent: return "HolderEquivalent";
        case EquivalenceStatus::LipschitzEquivalent: return "LipschitzEquivalent";
        case EquivalenceStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

EquivalenceVerdict decide_equivalence(const CarpetSpec& e, const CarpetSpec& f, const EquivalenceOptions& options) {
    EquivalenceVerdict v;
    auto add = [&](std::string name, bool passed, std::string detail = {}) {
        v.hypotheses.push_back({std::move(name), passed, std::move(detail)});
        return passed;
    };
    const auto ce = check_conditions(e), cf = check_conditions(f);

    bool all = add("equal-n", e.n() == f.n(), "n_E=" + std::to_string(e.n()) + ", n_F=" + std::to_string(f.n()));
    all &= add("cross-intersection", ce.crossIntersection && cf.crossIntersection,
               std::string("E: ") + (ce.crossIntersection ? "yes" : "no") +
                   ", F: " + (cf.crossIntersection ? "yes" : "no"));
    auto sep = [](const ConditionReport& c) {
        return c.verticalSeparation ? "vertical separation" : c.topIsolated ? "top isolated" : "neither";
    };
    all &= add("top-isolated-or-vertical-separation",
               (ce.topIsolated || ce.verticalSeparation) && (cf.topIsolated || cf.verticalSeparation),
               std::string("E: ") + sep(ce) + ", F: " + sep(cf));

    // The reduction to Class 0 automata needs the topology automata to be
    // cross automata, and top-isolated carpets to reduce through Class 2.
    std::optional<CrossAutomaton> finalE, finalF;
    auto reduce = [&](const CarpetSpec& spec, const ConditionReport& cond, std::optional<CrossAutomaton>& out,
                      std::string& detail) {
        try {
            const auto cross = topology_cross(spec);
            require_valid(cross);
            if (!cond.verticalSeparation) {
                const auto cls = classify(cross, &spec);
                if (cls.kind != CrossClass::Class1 && cls.kind != CrossClass::Class2) {
                    detail = std::string("automaton is ") + cross_class_name(cls.kind) +
                             (cls.reason.empty() ? "" : " (" + cls.reason + ")");
                    return false;
                }
            } else if (!cross.pv().empty()) {
                detail = "vertically separated carpet with vertical transitions";
                return false;
            }
            out = final_automaton(spec);
            return true;
        } catch (const Error& err) {
            detail = err.what();
            return false;
        }
    };
    std::string de, df;
    const bool reducedE = reduce(e, ce, finalE, de);
    const bool reducedF = reduce(f, cf, finalF, df);
    all &= add("reducible-cross-automaton", reducedE && reducedF,
               (reducedE ? std::string("E: ok") : "E: " + de) + "; " + (reducedF ? "F: ok" : "F: " + df));

    const auto pe = profile(e), pf = profile(f);
    all &= add("block-sizes", pe.blockSizes == pf.blockSizes);
    all &= add("pair-sizes", pe.pairSizes == pf.pairSizes);

    if (!all) return v;

    try {
        v.certificate = build_letter_bijection(e, f, match_blocks(e, f));
        add("letter-bijection", true);
    } catch (const Error& err) {
        add("letter-bijection", false, err.what());
        return v;
    }
    v.isometry = isometry_check_exhaustive(finalE->induced(), finalF->induced(), *v.certificate,
                                           options.isometryStemLength);
    if (!add("isometry", v.isometry->ok(),
             std::to_string(v.isometry->checked) + " pairs, " + std::to_string(v.isometry->mismatchCount) +
                 " mismatches"))
        return v;

    const bool lipschitz = e.uniform() && f.uniform() && e.n() == e.m() && f.n() == f.m();
    v.status = lipschitz ? EquivalenceStatus::LipschitzEquivalent : EquivalenceStatus::HolderEquivalent;
    return v;
}

nlohmann::json to_json(const LetterBijection& h) {
    nlohmann::json map = nlohmann::json::object();
    for (std::size_t a = 0; a < h.map.size(); ++a) map[std::to_string(a + 1)] = h.map[a];
    auto matching = nlohmann::json::array();
    for (const auto& [i, j] : h.blockMatching) matching.push_back({i, j});
    return {{"map", map}, {"blockMatching", matching}};
}

nlohmann::json to_json(const IsometryReport& report) {
    auto mm = nlohmann::json::array();
    for (const auto& m : report.mismatches)
        mm.push_back({{"x", m.x.str()}, {"y", m.y.str()}, {"TE", m.tE.str()}, {"TF", m.tF.str()}});
    return {{"checked", report.checked}, {"mismatchCount", report.mismatchCount}, {"mismatches", mm}};
}

nlohmann::json to_json(const EquivalenceVerdict& verdict) {
    auto hyps = nlohmann::json::array();
    for (const auto& h : verdict.hypotheses) {
        nlohmann::json rec{{"name", h.name}, {"passed", h.passed}};
        if (!h.detail.empty()) rec["detail"] = h.detail;
        hyps.push_back(std::move(rec));
    }
    nlohmann::json doc{{"status", equivalence_status_name(verdict.status)}, {"hypotheses", hyps}};
    doc["certificate"] = verdict.certificate ? to_json(*verdict.certificate) : nlohmann::json(nullptr);
    doc["isometry"] = verdict.isometry ? to_json(*verdict.isometry) : nlohmann::json(nullptr);
    return doc;
}

}  // namespace baranski
