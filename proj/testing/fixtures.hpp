#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "baranski/automaton.hpp"
#include "baranski/carpet.hpp"
#include "baranski/cross.hpp"
#include "baranski/word.hpp"

namespace baranski::testing {

struct NamedCarpet {
    std::string name;
    CarpetSpec spec;
};

/// The 9-letter automaton of the worked cross-automaton example, exactly as
/// printed (letter 9 is horizontally right of 5).
CrossAutomaton example_cross_literal();
/// The same relations without the pair (5, 9); letter 9 is isolated.
CrossAutomaton example_cross_restricted();

/// A 5×5 and a 5×7 carpet with one full H-block, one size-2 block, two free
/// size-1 blocks and one (1,1) pair.
CarpetSpec example_holder_e();
CarpetSpec example_holder_f();

/// Two 3×3 carpets with five digits: one full H-block and two size-1 blocks.
/// The first is vertically separated, the second top isolated.
CarpetSpec example_lipschitz_f1();
CarpetSpec example_lipschitz_f3();

/// Ten top-isolated, cross-intersecting, not vertically separated carpets.
std::vector<NamedCarpet> top_isolated_carpets();

/// Carpets for the projection checks, three with non-uniform ratios.
std::vector<NamedCarpet> projection_carpets();

/// n, m in [2, max_side], 2 ≤ N ≤ min(max_digits, n·m). With `ratios`,
/// each axis gets random positive ratios summing to 1 half of the time.
CarpetSpec random_carpet(std::mt19937_64& rng, int max_side, int max_digits, bool ratios = false);

PeriodicWord random_word(std::mt19937_64& rng, int alphabet_size, int max_preperiod = 4, int max_period = 3);

/// A word that tends to keep the machine alive when read against `x`: each
/// letter is drawn among those avoiding Exit when there are any, and the
/// tail is chosen to loop in the reached state when possible.
PeriodicWord guided_partner(std::mt19937_64& rng, const SigmaAutomaton& machine, const PeriodicWord& x);

/// Word pairs, half independent and half automaton-guided.
std::vector<std::pair<PeriodicWord, PeriodicWord>> sample_pairs(std::mt19937_64& rng, const SigmaAutomaton& machine,
                                                                std::size_t count);
std::vector<WordTriple> sample_triples(std::mt19937_64& rng, const SigmaAutomaton& machine, std::size_t count);

/// Every word with preperiod ≤ max_preperiod and a one-letter period, in
/// canonical form without duplicates.
std::vector<PeriodicWord> short_words(int alphabet_size, int max_preperiod);

}  // namespace baranski::testing
