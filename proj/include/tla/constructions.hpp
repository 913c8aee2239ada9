#pragma once

// Automaton-to-automaton constructions. Each function checks the variant of
// its input, throws VariantError on a mismatch, and returns a valid
// automaton whose language stands in the documented relation to the input.
//
// Composite states get readable names:
//   (q|S:p,r)   state q, marker-visited set {p,r}       eliminate_end_loops
//   (q|G:a,b)   state q, letters still possible {a,b}   repetitive_to_plain
//   (q|L:a)     state q, first letter a held back       first_letter_normalize
//   q'          primed copy                              repetitive_to_nonreturning

#include <string>
#include <vector>

#include "tla/automaton.hpp"

namespace tla {

struct ConstructionReport {
    std::string construction;
    VariantDescriptor input;
    VariantDescriptor output;
    /// Output states per input state.
    double state_blowup = 0.0;
    std::vector<std::string> notes;
};

struct ConstructionResult {
    TlAutomaton automaton;
    ConstructionReport report;
};

/// Halting returning automaton -> repetitive one accepting at the marker
/// exactly in the former final states.
TlAutomaton embed_repetitive(const TlAutomaton& aut);

/// Non-returning halting automaton -> classical finite automaton (no
/// translucent letters) where translucent letters become self-loops.
TlAutomaton nrnr_to_nfa(const TlAutomaton& aut);

/// Repetitive returning -> repetitive non-returning. Every letter read lands
/// in a primed copy that sees nothing and jumps back at the marker, which
/// puts the head back on the left end.
TlAutomaton repetitive_to_nonreturning(const TlAutomaton& aut);

/// Pairs states with the set of states in which the marker was passed since
/// the last letter read; a second marker move from the same state is cut.
/// Only reachable pairs are built.
TlAutomaton eliminate_end_loops(const TlAutomaton& aut);

/// Replaces Accept at the marker by a move into a sink that reads the rest
/// of the tape and then accepts.
TlAutomaton complete_reading(const TlAutomaton& aut);

/// complete_reading after eliminate_end_loops.
TlAutomaton normalize(const TlAutomaton& aut);

/// Repetitive returning -> halting returning (a plain NFAwtl) over states
/// (q, letters that may still be on the tape). Marker moves are folded into
/// the preceding letter read.
TlAutomaton repetitive_to_plain(const TlAutomaton& aut);

/// Deterministic returning automaton -> repetitive deterministic automaton
/// for the complement language. Halting input is embedded first.
TlAutomaton complement_deterministic(const TlAutomaton& aut);

/// Deterministic repetitive returning automaton -> equivalent one whose
/// first step always deletes the first letter of the input.
TlAutomaton first_letter_normalize(const TlAutomaton& aut);

/// Automaton for { z | word z in L(aut) }.
TlAutomaton left_quotient(const TlAutomaton& aut, std::string_view word);

/// Automaton for the shuffle of two languages over disjoint alphabets.
TlAutomaton disjoint_shuffle(const TlAutomaton& first, const TlAutomaton& second);

/// Totalizes a repetitive returning automaton so that every computation,
/// accepting or not, deletes the whole input. Applies normalize first.
TlAutomaton complete_all_computations(const TlAutomaton& aut);

/// Keeps the states reachable from the initial states.
TlAutomaton prune_unreachable(const TlAutomaton& aut);

/// Runs a construction by its command-line name (embed, nrnr-to-nfa,
/// to-nonreturning, eliminate-loops, complete-reading, normalize, to-plain,
/// complement, first-letter, quotient:WORD); shuffle takes a second operand.
ConstructionResult run_construction(const std::string& name, const TlAutomaton& aut,
                                    const TlAutomaton* second = nullptr);

}  // namespace tla
