#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace baranski::testing {

namespace {

CarpetSpec uniform(int n, int m, std::vector<Digit> digits) { return CarpetSpec::make(n, m, std::move(digits)); }

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Rational> random_ratios(std::mt19937_64& rng, int count) {
    std::vector<int> weights(static_cast<std::size_t>(count));
    for (auto& w : weights) w = uniform_int(rng, 1, 4);
    const int total = std::accumulate(weights.begin(), weights.end(), 0);
    std::vector<Rational> out;
    for (int w : weights) out.emplace_back(Rational(w) / total);
    return out;
}

}  // namespace

CrossAutomaton example_cross_literal() {
    return CrossAutomaton::make(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 9}}, {{7, 6}, {6, 4}}, {{5, 1}}, {{8, 7}});
}

CrossAutomaton example_cross_restricted() {
    return CrossAutomaton::make(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, {{7, 6}, {6, 4}}, {{5, 1}}, {{8, 7}});
}

CarpetSpec example_holder_e() {
    return uniform(5, 5, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {1, 1}, {2, 1}, {0, 2}, {4, 2}, {0, 3}, {2, 4}});
}

CarpetSpec example_holder_f() {
    return uniform(5, 7, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {1, 2}, {2, 2}, {0, 4}, {4, 4}, {1, 6}, {3, 6}});
}

CarpetSpec example_lipschitz_f1() { return uniform(3, 3, {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}); }

CarpetSpec example_lipschitz_f3() { return uniform(3, 3, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 2}}); }

std::vector<NamedCarpet> top_isolated_carpets() {
    return {
        {"ti-3x3-a", uniform(3, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 2}})},
        {"ti-3x3-b", uniform(3, 3, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 2}})},
        {"ti-3x4-a", uniform(3, 4, {{1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 3}})},
        {"ti-3x4-b", uniform(3, 4, {{0, 0}, {1, 0}, {0, 1}, {0, 2}, {1, 3}})},
        {"ti-4x3", uniform(4, 3, {{0, 0}, {1, 0}, {3, 0}, {3, 1}, {1, 2}})},
        {"ti-4x4-a", uniform(4, 4, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 3}})},
        {"ti-4x4-b", uniform(4, 4, {{0, 0}, {1, 0}, {0, 1}, {0, 2}, {1, 3}})},
        {"ti-2x4", uniform(2, 4, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {0, 3}})},
        {"ti-3x3-c", uniform(3, 3, {{1, 0}, {2, 0}, {2, 1}, {1, 2}})},
        {"ti-3x3-d", uniform(3, 3, {{0, 0}, {1, 0}, {0, 1}, {1, 2}})},
    };
}

std::vector<NamedCarpet> projection_carpets() {
    const auto r = [](int p, int q) { return Rational(p) / q; };
    return {
        {"holder-e", example_holder_e()},
        {"lipschitz-f1", example_lipschitz_f1()},
        {"baranski-3x3", CarpetSpec::make(3, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 2}},
                                          std::vector<Rational>{r(1, 2), r(1, 4), r(1, 4)},
                                          std::vector<Rational>{r(1, 3), r(1, 3), r(1, 3)})},
        {"baranski-2x2", CarpetSpec::make(2, 2, {{0, 0}, {1, 0}, {1, 1}}, std::vector<Rational>{r(1, 3), r(2, 3)},
                                          std::vector<Rational>{r(1, 4), r(3, 4)})},
        {"baranski-4x3", CarpetSpec::make(4, 3, {{0, 0}, {1, 0}, {3, 0}, {3, 1}, {1, 2}, {2, 2}},
                                          std::vector<Rational>{r(1, 5), r(2, 5), r(1, 5), r(1, 5)},
                                          std::vector<Rational>{r(1, 2), r(1, 6), r(1, 3)})},
    };
}

CarpetSpec random_carpet(std::mt19937_64& rng, int max_side, int max_digits, bool ratios) {
    const int n = uniform_int(rng, 2, max_side), m = uniform_int(rng, 2, max_side);
    const int count = uniform_int(rng, 2, std::min(max_digits, n * m));
    std::vector<Digit> cells;
    for (int y = 0; y < m; ++y)
        for (int x = 0; x < n; ++x) cells.push_back({x, y});
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(static_cast<std::size_t>(count));
    std::optional<std::vector<Rational>> h, v;
    if (ratios && coin(rng, 0.5)) {
        h = random_ratios(rng, n);
        v = random_ratios(rng, m);
    }
    return CarpetSpec::make(n, m, std::move(cells), std::move(h), std::move(v));
}

PeriodicWord random_word(std::mt19937_64& rng, int alphabet_size, int max_preperiod, int max_period) {
    Word pre(static_cast<std::size_t>(uniform_int(rng, 0, max_preperiod)));
    Word per(static_cast<std::size_t>(uniform_int(rng, 1, max_period)));
    for (auto& a : pre) a = uniform_int(rng, 1, alphabet_size);
    for (auto& a : per) a = uniform_int(rng, 1, alphabet_size);
    return PeriodicWord(std::move(pre), std::move(per));
}

PeriodicWord guided_partner(std::mt19937_64& rng, const SigmaAutomaton& machine, const PeriodicWord& x) {
    const int n = machine.alphabet_size();
    const std::size_t prefix = x.preperiod().size() + static_cast<std::size_t>(uniform_int(rng, 0, 3));
    const std::size_t period = x.period().size();
    Word pre, per;
    State s = State::id();
    std::vector<Letter> alive, looping;
    for (std::size_t k = 0; k < prefix + period; ++k) {
        const Letter a = x.at(k);
        alive.clear();
        looping.clear();
        for (Letter j = 1; j <= n; ++j) {
            const State t = machine.step(s, a, j);
            if (t.is_exit()) continue;
            alive.push_back(j);
            if (t == s && !s.is_id()) looping.push_back(j);
        }
        // Staying in Id just copies x, so leave it only some of the time.
        if (s.is_id() && alive.size() > 1 && coin(rng, 0.5)) std::erase(alive, a);
        Letter j;
        if (k >= prefix && !looping.empty() && coin(rng, 0.8))
            j = looping[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(looping.size()) - 1))];
        else if (!alive.empty() && coin(rng, 0.85))
            j = alive[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(alive.size()) - 1))];
        else
            j = uniform_int(rng, 1, n);
        s = machine.step(s, a, j);
        (k < prefix ? pre : per).push_back(j);
    }
    return PeriodicWord(std::move(pre), std::move(per));
}

std::vector<std::pair<PeriodicWord, PeriodicWord>> sample_pairs(std::mt19937_64& rng, const SigmaAutomaton& machine,
                                                                std::size_t count) {
    const int n = machine.alphabet_size();
    std::vector<std::pair<PeriodicWord, PeriodicWord>> out;
    out.reserve(count);
    while (out.size() < count) {
        auto x = random_word(rng, n);
        auto y = coin(rng, 0.5) ? random_word(rng, n) : guided_partner(rng, machine, x);
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

std::vector<WordTriple> sample_triples(std::mt19937_64& rng, const SigmaAutomaton& machine, std::size_t count) {
    const int n = machine.alphabet_size();
    std::vector<WordTriple> out;
    out.reserve(count);
    while (out.size() < count) {
        auto x = random_word(rng, n);
        auto y = coin(rng, 0.8) ? guided_partner(rng, machine, x) : random_word(rng, n);
        PeriodicWord z = coin(rng, 0.4)   ? guided_partner(rng, machine, x)
                         : coin(rng, 0.6) ? guided_partner(rng, machine, y)
                                          : random_word(rng, n);
        out.push_back({std::move(x), std::move(y), std::move(z)});
    }
    return out;
}

std::vector<PeriodicWord> short_words(int alphabet_size, int max_preperiod) {
    std::set<PeriodicWord> unique;
    std::vector<Letter> stem;
    const auto extend = [&](auto&& self) -> void {
        for (Letter t = 1; t <= alphabet_size; ++t) unique.insert(PeriodicWord(stem, {t}));
        if (static_cast<int>(stem.size()) == max_preperiod) return;
        for (Letter a = 1; a <= alphabet_size; ++a) {
            stem.push_back(a);
            self(self);
            stem.pop_back();
        }
    };
    extend(extend);
    return {unique.begin(), unique.end()};
}

}  // namespace baranski::testing
