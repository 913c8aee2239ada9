#include <gtest/gtest.h>

#include "random_automata.hpp"
#include "tla/engine.hpp"
#include "tla/fast_membership.hpp"
#include "tla/fixtures.hpp"
#include "tla/oracle.hpp"

using namespace tla;

namespace {

std::vector<TlAutomaton> deterministic_returning() {
    std::vector<TlAutomaton> out;
    for (const auto& f : fixtures::all()) {
        if (f.automaton.head_mode == HeadMode::Returning && is_deterministic(f.automaton)) out.push_back(f.automaton);
    }
    for (EndMode end : {EndMode::Halting, EndMode::Repetitive}) {
        for (TlAutomaton& a : tla::testing::random_automata(61, 30, {HeadMode::Returning, end, true})) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

}  // namespace

TEST(FastMembership, ExampleWord) {
    EXPECT_TRUE(fast_accepts(fixtures::a_vee_c(), "aabbcba"));
    EXPECT_FALSE(fast_accepts(fixtures::a_vee_c(), "ab"));
    EXPECT_TRUE(fast_accepts(fixtures::a_vee_c(), ""));
}

TEST(FastMembership, RejectsOtherVariants) {
    EXPECT_THROW(FastMembership(fixtures::ab_or_abb_star()), VariantError);
    EXPECT_THROW(FastMembership(fixtures::l_2_nonreturning()), VariantError);
    EXPECT_THROW(FastMembership(fixtures::rowjfa_eq()), VariantError);
    EXPECT_THROW(fast_accepts(fixtures::l_eq(), "abc"), Error);
}

TEST(FastMembership, MarkerLoopRejects) {
    EXPECT_FALSE(fast_accepts(fixtures::marker_loop(), "bb"));
    EXPECT_FALSE(fast_accepts(fixtures::marker_loop(), ""));
}

TEST(FastMembership, AgreesWithEngineExhaustively) {
    for (const TlAutomaton& a : deterministic_returning()) {
        const FastMembership fast(a);
        const Engine engine(a);
        for_each_word(a.alphabet, 6, [&](const Word& w) {
            EXPECT_EQ(fast.accepts(w), engine.run_deterministic(w).verdict == Verdict::Accept) << render_word(w);
            return true;
        });
    }
}

TEST(FastMembership, ReadsMatchTraceAnnotations) {
    std::mt19937_64 rng(67);
    for (const TlAutomaton& a : deterministic_returning()) {
        const FastMembership fast(a);
        const Engine engine(a);
        for (int i = 0; i < 50; ++i) {
            const Word w = tla::testing::random_word(rng, a.alphabet, 32);
            std::vector<FastRead> reads;
            fast.accepts(w, reads);
            std::vector<FastRead> expected;
            std::size_t marker_run = 0;
            const Trace trace = engine.run_deterministic(w);
            for (const TraceStep& s : trace.steps) {
                if (s.kind.kind == StepKind::Kind::ReadLetter) {
                    expected.push_back({s.configuration.state, s.kind.input_index});
                    marker_run = 0;
                } else if (s.kind.kind == StepKind::Kind::EndMarkerMove && trace.verdict != Verdict::StepLimit) {
                    EXPECT_LE(++marker_run, a.states.size() + 1);
                }
            }
            EXPECT_LE(reads.size(), w.size());
            EXPECT_EQ(reads, expected) << w;
        }
    }
}

TEST(Bench, WordsCycleThePattern) {
    EXPECT_EQ(bench_word(Alphabet("ab"), "", 5), "ababa");
    EXPECT_EQ(bench_word(Alphabet("ab"), "abb", 7), "abbabba");
    const auto rows = bench_fast_membership(fixtures::l_eq(), {64, 128}, "", 0.0);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_TRUE(rows[0].accepted);
    EXPECT_GE(rows[1].repetitions, 3u);
    EXPECT_GT(rows[1].seconds, 0.0);
}
