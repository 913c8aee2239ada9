#pragma once

// Hand-built automata for the named example languages. Each one is locked
// to its language predicate by the oracle tests.

#include <string>
#include <vector>

#include "tla/automaton.hpp"

namespace tla::fixtures {

/// RDFAwtl over {a,b,c} for |w|_c = 1 and |w|_a = |w|_b, or no c and 2|w|_a = |w|_b.
TlAutomaton a_vee_c();
/// DFAwtl for |w|_a = |w|_b.
TlAutomaton l_eq();
/// DFAwtl for 2|w|_a = |w|_b.
TlAutomaton l_2eq();
/// DFAwtl over {c,d} for 2|w|_c = |w|_d.
TlAutomaton l_2eq_prime();
/// DFAwtl for |w|_a >= |w|_b.
TlAutomaton l_geq();
/// DFAwtl for c w with |w|_a >= |w|_b.
TlAutomaton l_c_rev();
/// DFAwtl over {c} for the single word c.
TlAutomaton single_c();
/// nr-DFAwtl for a^n b^n.
TlAutomaton l_2_nonreturning();
/// Classical NFA for (ab)* + (abb)*.
TlAutomaton ab_or_abb_star();
/// RDFAwtl that cycles at the marker: accepts nothing, loops on every input
/// made of b's.
TlAutomaton marker_loop();
/// RDFAwtl accepting every word over {a,b}.
TlAutomaton accept_all();
/// ROWJFA over {a,b} for |w|_a = |w|_b.
TlAutomaton rowjfa_eq();

struct Fixture {
    std::string file;       ///< shipped document name, e.g. "a_vee_c.tla"
    TlAutomaton automaton;
    std::string language;   ///< builtin language expression; empty if none
};

std::vector<Fixture> all();

}  // namespace tla::fixtures
