#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "random_automata.hpp"
#include "tla/engine.hpp"
#include "tla/fixtures.hpp"
#include "tla/oracle.hpp"

using namespace tla;

namespace {

TlAutomaton self_marker_loop() {
    TlAutomaton aut;
    aut.end_mode = EndMode::Repetitive;
    aut.alphabet = Alphabet("a");
    aut.states = {"q0"};
    aut.initial = {"q0"};
    aut.end_transitions.emplace("q0", EndAction::to({"q0"}));
    return aut;
}

std::map<Letter, int> letter_counts(std::string_view w) {
    std::map<Letter, int> m;
    for (Letter a : w) ++m[a];
    return m;
}

}  // namespace

TEST(Step, FirstStepOfExampleReadsTheC) {
    const auto next = step(fixtures::a_vee_c(), {"", "q0", "aabbcba"});
    ASSERT_EQ(next.size(), 1u);
    ASSERT_TRUE(next[0].configuration);
    EXPECT_EQ(*next[0].configuration, (Configuration{"", "q1", "aabbba"}));
    EXPECT_EQ(next[0].kind, StepKind::read('c', 4, 4));
}

TEST(Step, MarkerMoveWithoutC) {
    const auto next = step(fixtures::a_vee_c(), {"", "q0", "bbaabb"});
    ASSERT_EQ(next.size(), 1u);
    EXPECT_EQ(*next[0].configuration, (Configuration{"", "q4", "bbaabb"}));
    EXPECT_EQ(next[0].kind.kind, StepKind::Kind::EndMarkerMove);
}

TEST(Step, HaltingNonFinalRejects) {
    const TlAutomaton aut = fixtures::l_eq();
    // q1 hides a, so "aa" is in its translucent closure; q1 is not final.
    const auto next = step(aut, {"", "q1", "aa"});
    ASSERT_EQ(next.size(), 1u);
    EXPECT_FALSE(next[0].configuration);
    EXPECT_EQ(next[0].verdict, Verdict::Reject);
}

TEST(Step, NonReturningMarkerMoveRejoinsTheTape) {
    TlAutomaton aut;
    aut.head_mode = HeadMode::NonReturning;
    aut.end_mode = EndMode::Repetitive;
    aut.alphabet = Alphabet("ab");
    aut.states = {"p", "r"};
    aut.initial = {"p"};
    aut.translucency["p"] = {'a'};
    aut.letter_transitions[{"p", 'b'}] = {"p"};
    aut.end_transitions.emplace("p", EndAction::to({"r"}));
    auto next = step(aut, {"", "p", "ab"});
    ASSERT_EQ(next.size(), 1u);
    EXPECT_EQ(*next[0].configuration, (Configuration{"a", "p", ""}));
    next = step(aut, *next[0].configuration);
    ASSERT_EQ(next.size(), 1u);
    EXPECT_EQ(*next[0].configuration, (Configuration{"", "r", "a"}));
}

TEST(Step, RotatingJumpRotatesSkippedPrefix) {
    TlAutomaton aut;
    aut.head_mode = HeadMode::RotatingJump;
    aut.alphabet = Alphabet("abc");
    aut.states = {"p"};
    aut.initial = {"p"};
    aut.letter_transitions[{"p", 'c'}] = {"p"};
    const auto next = step(aut, {"", "p", "abcba"});
    ASSERT_EQ(next.size(), 1u);
    EXPECT_EQ(*next[0].configuration, (Configuration{"", "p", "baab"}));
}

TEST(RunDeterministic, ExampleFirstComputation) {
    const Trace t = run_deterministic(fixtures::a_vee_c(), "aabbcba");
    EXPECT_EQ(t.verdict, Verdict::Accept);
    EXPECT_EQ(t.step_count(), 8u);
    EXPECT_EQ(render_trace(t),
              "q0 aabbcba<|\n|- q1 aabbba<|\n|- q2 abbba<|\n|- q1 abba<|\n|- q2 bba<|\n|- q1 ba<|\n"
              "|- q3 a<|\n|- q1 <|\n|- Accept\n");
}

TEST(RunDeterministic, EmptyWordTakesTwoMarkerMoves) {
    const Trace t = run_deterministic(fixtures::a_vee_c(), "");
    EXPECT_EQ(t.verdict, Verdict::Accept);
    EXPECT_EQ(render_trace(t), "q0 <|\n|- q4 <|\n|- Accept\n");
}

TEST(RunDeterministic, RejectedRunEndsWithReject) {
    const Trace t = run_deterministic(fixtures::a_vee_c(), "ab");
    EXPECT_EQ(t.verdict, Verdict::Reject);
    EXPECT_EQ(render_trace(t).substr(render_trace(t).rfind("|- ")), "|- Reject\n");
}

TEST(RunDeterministic, MarkerLoopHitsStepLimit) {
    const Trace t = run_deterministic(self_marker_loop(), "");
    EXPECT_EQ(t.verdict, Verdict::StepLimit);
    EXPECT_FALSE(accepts(self_marker_loop(), ""));
}

TEST(RunDeterministic, NondeterministicInputThrows) {
    EXPECT_THROW(run_deterministic(fixtures::ab_or_abb_star(), "ab"), VariantError);
}

TEST(RunNondeterministic, ExampleWords) {
    EXPECT_EQ(run_nondeterministic(fixtures::a_vee_c(), "abc").verdict, Verdict::Accept);
    EXPECT_EQ(run_nondeterministic(fixtures::a_vee_c(), "ab").verdict, Verdict::Reject);
    const SearchResult loop = run_nondeterministic(self_marker_loop(), "");
    EXPECT_EQ(loop.verdict, Verdict::Reject);
    EXPECT_LE(loop.configurations_explored, 2u);
}

TEST(RunNondeterministic, WitnessIsAnAcceptingComputation) {
    const SearchResult r = run_nondeterministic(fixtures::ab_or_abb_star(), "abbabb");
    ASSERT_EQ(r.verdict, Verdict::Accept);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->verdict, Verdict::Accept);
    EXPECT_EQ(r.witness->steps.front().configuration.remaining, "abbabb");
    EXPECT_EQ(r.witness->steps.size(), 7u);
}

TEST(Accepts, ExampleWords) {
    EXPECT_TRUE(accepts(fixtures::a_vee_c(), "aabbcba"));
    // Two a's, two b's and one c: in the first disjunct.
    EXPECT_TRUE(accepts(fixtures::a_vee_c(), "aabbc"));
    EXPECT_TRUE(builtin_language("L_vee_c").contains("aabbc"));
    EXPECT_THROW(accepts(fixtures::a_vee_c(), "abd"), Error);
}

TEST(Accepts, NondeterministicAgreesWithDeterministicOnRandomAutomata) {
    for (const auto& shape : tla::testing::all_shapes()) {
        if (!shape.deterministic) continue;
        for (const TlAutomaton& a : tla::testing::random_automata(17, 20, shape)) {
            const Engine engine(a);
            for_each_word(a.alphabet, 5, [&](const Word& w) {
                const Verdict det = engine.run_deterministic(w).verdict;
                const Verdict nondet = engine.run_nondeterministic(w).verdict;
                EXPECT_EQ(det == Verdict::Accept, nondet == Verdict::Accept) << render_word(w);
                return true;
            });
        }
    }
}

TEST(Trace, LetterConservationAndPerLetterOrder) {
    for (HeadMode head : {HeadMode::Returning, HeadMode::NonReturning}) {
        for (const TlAutomaton& a : tla::testing::random_automata(23, 30, {head, EndMode::Repetitive, true})) {
            const Engine engine(a);
            for_each_word(a.alphabet, 5, [&](const Word& w) {
                const Trace t = engine.run_deterministic(w);
                std::string read;
                std::map<Letter, std::size_t> last_index;
                for (const TraceStep& s : t.steps) {
                    const Configuration& c = s.configuration;
                    EXPECT_EQ(letter_counts(read + c.consumed_prefix + c.remaining), letter_counts(w));
                    if (head == HeadMode::Returning) EXPECT_TRUE(c.consumed_prefix.empty());
                    if (s.kind.kind != StepKind::Kind::ReadLetter) continue;
                    EXPECT_EQ(w[s.kind.input_index], s.kind.letter);
                    if (head == HeadMode::Returning && last_index.count(s.kind.letter)) {
                        EXPECT_GT(s.kind.input_index, last_index[s.kind.letter]);
                    }
                    last_index[s.kind.letter] = s.kind.input_index;
                    read += s.kind.letter;
                }
                return true;
            });
        }
    }
}

TEST(Trace, RotatingJumpDeletesOneLetterPerRead) {
    for (const TlAutomaton& a : tla::testing::random_automata(29, 30, {HeadMode::RotatingJump, EndMode::Halting, true})) {
        const Engine engine(a);
        for_each_word(a.alphabet, 5, [&](const Word& w) {
            const Trace t = engine.run_deterministic(w);
            for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
                std::map<Letter, int> before = letter_counts(t.steps[i].configuration.remaining);
                const std::map<Letter, int> after = letter_counts(t.steps[i + 1].configuration.remaining);
                EXPECT_EQ(t.steps[i].kind.kind, StepKind::Kind::ReadLetter);
                if (--before[t.steps[i].kind.letter] == 0) before.erase(t.steps[i].kind.letter);
                EXPECT_EQ(before, after);
            }
            return true;
        });
    }
}

TEST(Trace, RowjfaAcceptsOnlyOnEmptyTape) {
    const TlAutomaton aut = fixtures::rowjfa_eq();
    EXPECT_TRUE(accepts(aut, "abba"));
    EXPECT_FALSE(accepts(aut, "aab"));
    EXPECT_TRUE(equivalent_up_to(aut, builtin_language("L_eq"), 8).equivalent());
}

TEST(RenderConfiguration, NonReturningShowsPrefix) {
    EXPECT_EQ(render_configuration({"", "q0", "ab"}), "q0 ab<|");
    EXPECT_EQ(render_configuration({"ab", "q3", "ba"}), "ab q3 ba<|");
    EXPECT_EQ(render_configuration({"", "q1", ""}), "q1 <|");
}

TEST(StepLimit, DefaultBoundFormula) {
    const CompiledAutomaton aut(fixtures::a_vee_c());
    // |w|(|Sigma|+1) + (|Q|+1)(|w|+1) with |w| = 7, |Sigma| = 3, |Q| = 8.
    EXPECT_EQ(default_step_limit(aut, 7), 7u * 4 + 9u * 8);
}
