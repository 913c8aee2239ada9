#include <gtest/gtest.h>

#include "random_automata.hpp"
#include "tla/automaton.hpp"
#include "tla/engine.hpp"
#include "tla/fixtures.hpp"
#include "tla/oracle.hpp"

using namespace tla;

namespace {

bool has_violation(const ValidationReport& report, const std::string& text) {
    for (const Violation& v : report) {
        if (v.message.find(text) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST(Alphabet, RejectsReservedAndDuplicateLetters) {
    EXPECT_THROW(Alphabet("a<"), Error);
    EXPECT_THROW(Alphabet("a|"), Error);
    EXPECT_THROW(Alphabet("aa"), Error);
    EXPECT_THROW(Alphabet("a "), Error);
    const Alphabet ab("ba");
    EXPECT_EQ(ab.index_of('b'), 0);
    EXPECT_EQ(ab.index_of('a'), 1);
    EXPECT_EQ(ab.index_of('c'), -1);
    EXPECT_TRUE(ab.same_letters(Alphabet("ab")));
    EXPECT_FALSE(ab == Alphabet("ab"));
}

TEST(Validate, ExampleAutomatonIsValid) { EXPECT_TRUE(validate(fixtures::a_vee_c()).empty()); }

TEST(Validate, TranslucencyBlocking) {
    TlAutomaton aut;
    aut.alphabet = Alphabet("a");
    aut.states = {"q"};
    aut.initial = {"q"};
    aut.translucency["q"] = {'a'};
    aut.letter_transitions[{"q", 'a'}] = {"q"};
    const ValidationReport report = validate(aut);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].message, "translucency blocking at (q,a)");
}

TEST(Validate, UnknownTargetState) {
    TlAutomaton aut;
    aut.alphabet = Alphabet("a");
    aut.states = {"q"};
    aut.initial = {"q"};
    aut.letter_transitions[{"q", 'a'}] = {"p"};
    const ValidationReport report = validate(aut);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_TRUE(has_violation(report, "unknown state 'p'"));
}

TEST(Validate, ModeSpecificFields) {
    TlAutomaton rep = fixtures::a_vee_c();
    rep.finals = {"q0"};
    EXPECT_TRUE(has_violation(validate(rep), "repetitive automata have no final states"));

    TlAutomaton halting = fixtures::l_eq();
    halting.end_transitions.emplace("q0", EndAction::accept());
    EXPECT_TRUE(has_violation(validate(halting), "halting automata have no end transitions"));

    TlAutomaton jumping = fixtures::rowjfa_eq();
    jumping.translucency[jumping.states.front()] = {'a'};
    EXPECT_TRUE(has_violation(validate(jumping), "no translucency"));
}

TEST(Validate, EmptyAutomatonIsValidAndAcceptsNothing) {
    TlAutomaton empty;
    empty.alphabet = Alphabet("ab");
    EXPECT_TRUE(validate(empty).empty());
    EXPECT_TRUE(enumerate(empty, 5).empty());
}

TEST(Classify, ExampleAutomaton) {
    const VariantDescriptor d = classify(fixtures::a_vee_c());
    EXPECT_TRUE(d.deterministic);
    EXPECT_EQ(d.head_mode, HeadMode::Returning);
    EXPECT_EQ(d.end_mode, EndMode::Repetitive);
    EXPECT_EQ(d.canonical_name, "RDFAwtl");
}

TEST(Classify, ExtraTargetMakesItNondeterministic) {
    TlAutomaton aut = fixtures::a_vee_c();
    aut.letter_transitions[{"q0", 'c'}].insert("q2");
    EXPECT_EQ(classify(aut).canonical_name, "RNFAwtl");
}

TEST(Classify, ClassicalDfaIsDfawtl) {
    TlAutomaton dfa;
    dfa.alphabet = Alphabet("a");
    dfa.states = {"s"};
    dfa.initial = {"s"};
    dfa.finals = {"s"};
    dfa.letter_transitions[{"s", 'a'}] = {"s"};
    EXPECT_EQ(classify(dfa).canonical_name, "DFAwtl");
}

TEST(Classify, AllTenNames) {
    EXPECT_EQ(canonical_name(true, HeadMode::Returning, EndMode::Halting), "DFAwtl");
    EXPECT_EQ(canonical_name(false, HeadMode::Returning, EndMode::Halting), "NFAwtl");
    EXPECT_EQ(canonical_name(true, HeadMode::Returning, EndMode::Repetitive), "RDFAwtl");
    EXPECT_EQ(canonical_name(false, HeadMode::Returning, EndMode::Repetitive), "RNFAwtl");
    EXPECT_EQ(canonical_name(true, HeadMode::NonReturning, EndMode::Halting), "nr-nr-DFAwtl");
    EXPECT_EQ(canonical_name(false, HeadMode::NonReturning, EndMode::Halting), "nr-nr-NFAwtl");
    EXPECT_EQ(canonical_name(true, HeadMode::NonReturning, EndMode::Repetitive), "nr-DFAwtl");
    EXPECT_EQ(canonical_name(false, HeadMode::NonReturning, EndMode::Repetitive), "nr-NFAwtl");
    EXPECT_EQ(canonical_name(true, HeadMode::RotatingJump, EndMode::Halting), "ROWJFA");
    EXPECT_EQ(canonical_name(false, HeadMode::RotatingJump, EndMode::Halting), "NROWJFA");
}

TEST(Classify, InvalidAutomatonThrows) {
    TlAutomaton aut = fixtures::a_vee_c();
    aut.initial = {"nowhere"};
    EXPECT_THROW(classify(aut), Error);
}

TEST(Canonicalize, IdempotentAndRenamingInvariant) {
    const TlAutomaton aut = fixtures::a_vee_c();
    const TlAutomaton once = canonicalize(aut);
    EXPECT_EQ(canonicalize(once), once);

    std::map<State, State> rename;
    for (const State& q : aut.states) rename[q] = "s_" + q;
    const TlAutomaton renamed = rename_states(aut, rename);
    EXPECT_NE(renamed, aut);
    EXPECT_EQ(canonicalize(renamed).states, once.states);
    EXPECT_EQ(canonicalize(renamed).letter_transitions, once.letter_transitions);
    EXPECT_EQ(canonicalize(renamed).end_transitions, once.end_transitions);
    EXPECT_TRUE(equivalent_up_to(once, aut, 6).equivalent());
}

TEST(Canonicalize, RandomAutomataKeepVariantAndLanguage) {
    for (const auto& shape : tla::testing::all_shapes()) {
        for (const TlAutomaton& a : tla::testing::random_automata(71, 10, shape)) {
            const TlAutomaton c = canonicalize(a);
            EXPECT_EQ(classify(c), classify(a));
            EXPECT_EQ(canonicalize(c), c);
            EXPECT_TRUE(equivalent_up_to(c, a, 5).equivalent());
        }
    }
}

TEST(FreshState, AppendsPrimes) {
    EXPECT_EQ(fresh_state("q", {"p"}), "q");
    EXPECT_EQ(fresh_state("q", {"q", "q'"}), "q''");
}

TEST(Embedding, ClassicalFaLanguageIsKept) {
    // DFA over {a,b} for words ending in b.
    TlAutomaton dfa;
    dfa.alphabet = Alphabet("ab");
    dfa.states = {"s", "t"};
    dfa.initial = {"s"};
    dfa.finals = {"t"};
    for (const State& q : dfa.states) {
        dfa.letter_transitions[{q, 'a'}] = {"s"};
        dfa.letter_transitions[{q, 'b'}] = {"t"};
    }
    LanguageSpec ends_in_b{"ends_in_b", Alphabet("ab"),
                           [](std::string_view w) { return !w.empty() && w.back() == 'b'; }};
    EXPECT_TRUE(equivalent_up_to(dfa, ends_in_b, 8).equivalent());
}
