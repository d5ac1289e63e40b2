#include <doctest.h>

#include <random>

#include "baranski/automaton.hpp"
#include "baranski/cross.hpp"
#include "baranski/error.hpp"
#include "baranski/geometry.hpp"
#include "fixtures.hpp"

using namespace baranski;

namespace {

SigmaAutomaton topology(const CarpetSpec& spec) { return build_topology_automaton(spec, build_oracle(spec)); }

}  // namespace

TEST_CASE("states") {
    CHECK(State::id().mirror() == State::id());
    CHECK(State::exit().mirror() == State::exit());
    CHECK(State::offset({1, 0}).mirror() == State::offset({-1, 0}));
    CHECK(State::offset({1, -1}).mirror() == State::offset({-1, 1}));
    for (const auto s : canonical_state_order()) CHECK(State::parse(s.name()) == s);
    CHECK_THROWS_AS(State::parse("e3"), Error);
    CHECK_THROWS_AS(State::offset({0, 0}), Error);
}

TEST_CASE("periodic words are canonical") {
    CHECK(PeriodicWord::parse("1.2(1.2)") == PeriodicWord::parse("(1.2)"));
    CHECK(PeriodicWord::parse("(2.2)") == PeriodicWord::constant(2));
    CHECK(PeriodicWord::parse("3(1.3)") == PeriodicWord::parse("(3.1)"));
    CHECK(PeriodicWord::parse("1.3.2(4)").str() == "1.3.2(4)");
    CHECK_THROWS_AS(PeriodicWord::parse("1.2"), Error);
    CHECK_THROWS_AS(PeriodicWord::parse("()"), Error);
}

TEST_CASE("topology automaton construction") {
    SUBCASE("one letter") {
        const auto m = topology(CarpetSpec::make(2, 2, {{0, 0}}));
        CHECK(m.states() == std::vector<State>{State::id(), State::exit()});
        CHECK(m.step(State::id(), 1, 1) == State::id());
    }
    SUBCASE("horizontally connected pair") {
        const auto m = topology(CarpetSpec::make(2, 2, {{0, 0}, {1, 0}}));
        CHECK(m.step(State::id(), 1, 2) == State::offset({1, 0}));
        CHECK(m.step(State::id(), 2, 1) == State::offset({-1, 0}));
    }
    SUBCASE("diagonal pair follows the oracle") {
        for (int n : {2, 3}) {
            const auto spec = CarpetSpec::make(n, n, {{0, 0}, {1, 1}});
            const bool meets = build_oracle(spec).survives({1, 1});
            CHECK(meets == (n == 2));
            CHECK(topology(spec).step(State::id(), 1, 2) == (meets ? State::offset({1, 1}) : State::exit()));
        }
    }
}

TEST_CASE("surviving time") {
    const auto cross = testing::example_cross_restricted();
    const auto m = cross.induced();
    const auto w = [](const char* s) { return PeriodicWord::parse(s); };
    CHECK(surviving_time(m, w("1.2(3)"), w("1.2(3)")).is_infinite());
    CHECK(surviving_time(m, w("(1)"), w("(3)")) == SurvivingTime::finite(0));
    // (7,6) enters e2 and (γ,λ) = (8,7) keeps it there.
    CHECK(surviving_time(m, w("7(8)"), w("6(7)")).is_infinite());
    CHECK(surviving_time(m, w("(8)"), w("(7)")) == SurvivingTime::finite(0));
    // 1·5 against 2·1 enters e1 and loops on (5,1) once, then (5,2) exits.
    CHECK(surviving_time(m, w("1.5(2)"), w("2.1(2)")) == SurvivingTime::finite(2));
    CHECK(surviving_time(m, w("1.5(5)"), w("2.1(1)")).is_infinite());
    CHECK_THROWS_AS(surviving_time(m, w("(10)"), w("(1)")), Error);
}

TEST_CASE("surviving time is symmetric on topology automata") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto spec = testing::random_carpet(rng, 4, 10);
        const auto m = topology(spec);
        CHECK(mirror_check(m));
        for (const auto& [x, y] : testing::sample_pairs(rng, m, 300))
            CHECK(surviving_time(m, x, y) == surviving_time(m, y, x));
    }
}

TEST_CASE("feasibility") {
    std::mt19937_64 rng(9);
    const auto m = build_topology_automaton(testing::example_holder_e(), build_oracle(testing::example_holder_e()));
    const auto x = PeriodicWord::parse("1(2)");
    CHECK(check_feasibility(m, 1, {{x, x, PeriodicWord::parse("(3)")}}).empty());
    CHECK(check_feasibility(m, 1, testing::sample_triples(rng, m, 3000)).empty());
    // The unrestricted worked automaton has a triple coded twice at T = ∞.
    const auto literal = testing::example_cross_literal().induced();
    const auto bad = check_feasibility(literal, 1, {{PeriodicWord::parse("1(5)"), PeriodicWord::parse("2(1)"),
                                                     PeriodicWord::parse("1.9(1)")}});
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].txy.is_infinite());
    CHECK(bad[0].txz.is_infinite());
    CHECK(bad[0].tyz == SurvivingTime::finite(1));
}

TEST_CASE("mirror check") {
    CHECK(mirror_check(topology(CarpetSpec::make(3, 3, {{0, 0}}))));
    SigmaAutomaton::Builder b(2);
    b.set(State::id(), 1, 2, State::offset({1, 0}));
    b.set(State::id(), 2, 1, State::offset({-1, 0}));
    b.set(State::offset({1, 0}), 2, 1, State::offset({1, 0}));
    CHECK_FALSE(mirror_check(b.build()));
    b.set(State::offset({-1, 0}), 1, 2, State::offset({-1, 0}));
    CHECK(mirror_check(b.build()));
}

TEST_CASE("builder enforces the Id axiom") {
    SigmaAutomaton::Builder b(2);
    b.set(State::id(), 1, 2, State::id());
    CHECK_THROWS_AS(b.build(), Error);
    SigmaAutomaton::Builder c(2);
    c.set(State::id(), 1, 1, State::exit());
    CHECK_THROWS_AS(c.build(), Error);
}

TEST_CASE("DOT and JSON output") {
    const auto m = topology(testing::example_lipschitz_f3());
    const auto dot = to_dot(m);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("Exit") == std::string::npos);
    CHECK(to_dot(m, {true}).find("Exit") != std::string::npos);
    CHECK(to_dot(m) == dot);
    const auto doc = automaton_to_json(m);
    CHECK(automaton_from_json(doc) == m);
    CHECK(automaton_from_json(nlohmann::json::parse(doc.dump())) == m);
}
