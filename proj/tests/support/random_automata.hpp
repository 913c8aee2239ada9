#pragma once

// Seeded random automata for property tests: at most 4 states and 3 letters.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tla/automaton.hpp"

namespace tla::testing {

struct RandomShape {
    HeadMode head_mode = HeadMode::Returning;
    EndMode end_mode = EndMode::Repetitive;
    bool deterministic = true;
    std::size_t max_states = 4;
    std::size_t max_letters = 3;
};

TlAutomaton random_automaton(std::mt19937_64& rng, const RandomShape& shape);

/// `count` automata from a fixed seed.
std::vector<TlAutomaton> random_automata(std::uint64_t seed, std::size_t count, const RandomShape& shape);

/// Uniform word over the alphabet with length in [0, max_len].
Word random_word(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_len);

/// Every head mode, end mode and determinism combination that is valid.
std::vector<RandomShape> all_shapes();

}  // namespace tla::testing

namespace tla::testing {

/// Applies an injective letter renaming to alphabet, translucency and transitions.
TlAutomaton rename_letters(const TlAutomaton& aut, const std::map<Letter, Letter>& rename);

}  // namespace tla::testing
