#pragma once

// Ground truth for differential testing: decidable word predicates for the
// named languages, language combinators evaluated by brute force, bounded
// enumeration and comparison, and an acceptance oracle that shares no code
// with the execution engine.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tla/automaton.hpp"

namespace tla {

struct LanguageSpec {
    std::string name;
    Alphabet alphabet;
    std::function<bool(std::string_view)> predicate;

    /// False for words with letters outside the alphabet.
    bool contains(std::string_view word) const;
};

/// Built-in languages and combinator expressions, e.g. `L_vee_c`,
/// `com(R_ab_abb)`, `shuffle(L_eq,L_2eq)`. Throws Error for unknown names.
LanguageSpec builtin_language(std::string_view expression);
std::vector<std::string> builtin_language_names();

/// Membership decided by running the automaton.
LanguageSpec language_of(const TlAutomaton& aut);

/// Words letter-equivalent to a member.
LanguageSpec commutative_closure(const LanguageSpec& lang);
/// Interleavings of a word of `first` with a word of `second`.
LanguageSpec shuffle(const LanguageSpec& first, const LanguageSpec& second);
LanguageSpec reverse(const LanguageSpec& lang);
LanguageSpec product(const LanguageSpec& first, const LanguageSpec& second);
LanguageSpec star(const LanguageSpec& lang);
LanguageSpec complement(const LanguageSpec& lang);
/// { z | word z in lang }.
LanguageSpec quotient(const LanguageSpec& lang, std::string_view word);
/// Same predicate over a different alphabet; words using letters outside the
/// original alphabet are rejected.
LanguageSpec with_alphabet(const LanguageSpec& lang, Alphabet alphabet);

inline constexpr std::size_t kMaxEnumeratedWords = 10'000'000;

/// Number of words of length <= max_len; throws Error past the guard.
std::size_t word_count(const Alphabet& alphabet, std::size_t max_len);

/// Calls `visit` on every word of length <= max_len in length-lexicographic
/// order (letters ordered as declared). Stops early when `visit` returns false.
void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit);

std::vector<Word> enumerate(const LanguageSpec& lang, std::size_t max_len);
std::vector<Word> enumerate(const TlAutomaton& aut, std::size_t max_len);

struct EquivalenceReport {
    enum class Side { None, First, Second };

    std::size_t requested = 0;
    std::size_t equivalent_up_to = 0;
    std::optional<Word> counterexample;
    /// Operand that accepts the counterexample.
    Side side = Side::None;

    bool equivalent() const { return !counterexample.has_value(); }
};

/// Compares membership word by word in length-lexicographic order over the
/// union of both alphabets (the first operand's letters first).
EquivalenceReport equivalent_up_to(const LanguageSpec& first, const LanguageSpec& second,
                                   std::size_t max_len);
EquivalenceReport equivalent_up_to(const TlAutomaton& first, const TlAutomaton& second,
                                   std::size_t max_len);
EquivalenceReport equivalent_up_to(const TlAutomaton& first, const LanguageSpec& second,
                                   std::size_t max_len);

inline constexpr std::size_t kBruteForceMaxLength = 12;

/// Exhaustive exploration of the computation relation straight from the
/// automaton tables. Throws Error for words longer than kBruteForceMaxLength.
bool brute_accepts(const TlAutomaton& aut, std::string_view word);

std::string render_word(std::string_view word);

}  // namespace tla
