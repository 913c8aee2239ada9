#include "tla/fixtures.hpp"

namespace tla::fixtures {

namespace {

class Builder {
public:
    Builder(std::string name, HeadMode head, EndMode end, std::string_view letters) {
        aut_.name = std::move(name);
        aut_.head_mode = head;
        aut_.end_mode = end;
        aut_.alphabet = Alphabet(letters);
    }

    Builder& state(const State& q, std::string_view hidden = "") {
        aut_.states.push_back(q);
        if (!hidden.empty()) aut_.translucency[q] = LetterSet(hidden.begin(), hidden.end());
        return *this;
    }
    Builder& initial(const State& q) {
        aut_.initial.insert(q);
        return *this;
    }
    Builder& final(const State& q) {
        aut_.finals.insert(q);
        return *this;
    }
    Builder& on(const State& from, Letter a, const State& to) {
        aut_.letter_transitions[{from, a}].insert(to);
        return *this;
    }
    Builder& marker(const State& from, const State& to) {
        aut_.end_transitions.insert_or_assign(from, EndAction::to({to}));
        return *this;
    }
    Builder& accept_at_marker(const State& from) {
        aut_.end_transitions.insert_or_assign(from, EndAction::accept());
        return *this;
    }
    TlAutomaton build() const {
        require_valid(aut_);
        return aut_;
    }

private:
    TlAutomaton aut_;
};

}  // namespace

TlAutomaton a_vee_c() {
    return Builder("A_vee_c", HeadMode::Returning, EndMode::Repetitive, "abc")
        .state("q0", "ab").state("q1").state("q2", "a").state("q3", "b")
        .state("q4").state("q5", "a").state("q6", "a").state("q7", "b")
        .initial("q0")
        .on("q0", 'c', "q1").marker("q0", "q4")
        .on("q1", 'a', "q2").on("q1", 'b', "q3").accept_at_marker("q1")
        .on("q2", 'b', "q1").on("q3", 'a', "q1")
        .on("q4", 'a', "q5").on("q4", 'b', "q7").accept_at_marker("q4")
        .on("q5", 'b', "q6").on("q6", 'b', "q4").on("q7", 'a', "q6")
        .build();
}

TlAutomaton l_eq() {
    // Read any letter, then find a partner of the other kind.
    return Builder("L_eq", HeadMode::Returning, EndMode::Halting, "ab")
        .state("q0").state("q1", "a").state("q2", "b")
        .initial("q0").final("q0")
        .on("q0", 'a', "q1").on("q0", 'b', "q2")
        .on("q1", 'b', "q0").on("q2", 'a', "q0")
        .build();
}

TlAutomaton l_2eq() {
    // Each round deletes one a and two b's.
    return Builder("L_2eq", HeadMode::Returning, EndMode::Halting, "ab")
        .state("q0").state("q1", "a").state("q2", "a").state("q3", "b").state("q4", "a")
        .initial("q0").final("q0")
        .on("q0", 'a', "q1").on("q1", 'b', "q2").on("q2", 'b', "q0")
        .on("q0", 'b', "q3").on("q3", 'a', "q4").on("q4", 'b', "q0")
        .build();
}

TlAutomaton l_2eq_prime() {
    return Builder("L_2eq_prime", HeadMode::Returning, EndMode::Halting, "cd")
        .state("p0").state("p1", "c").state("p2", "c").state("p3", "d").state("p4", "c")
        .initial("p0").final("p0")
        .on("p0", 'c', "p1").on("p1", 'd', "p2").on("p2", 'd', "p0")
        .on("p0", 'd', "p3").on("p3", 'c', "p4").on("p4", 'd', "p0")
        .build();
}

TlAutomaton l_geq() {
    // q1 owes nothing: an unmatched a may stay behind.
    return Builder("L_geq", HeadMode::Returning, EndMode::Halting, "ab")
        .state("q0").state("q1", "a").state("q2", "b")
        .initial("q0").final("q0").final("q1")
        .on("q0", 'a', "q1").on("q0", 'b', "q2")
        .on("q1", 'b', "q0").on("q2", 'a', "q0")
        .build();
}

TlAutomaton l_c_rev() {
    return Builder("L_c_rev", HeadMode::Returning, EndMode::Halting, "abc")
        .state("s").state("q0").state("q1", "a").state("q2", "b")
        .initial("s").final("q0").final("q1")
        .on("s", 'c', "q0")
        .on("q0", 'a', "q1").on("q0", 'b', "q2")
        .on("q1", 'b', "q0").on("q2", 'a', "q0")
        .build();
}

TlAutomaton single_c() {
    return Builder("L_single_c", HeadMode::Returning, EndMode::Halting, "c")
        .state("q0").state("q1")
        .initial("q0").final("q1")
        .on("q0", 'c', "q1")
        .build();
}

TlAutomaton l_2_nonreturning() {
    // One pass deletes the first a and the first b after it, then checks
    // that no a follows; the marker rewinds for the next pass.
    return Builder("L_2", HeadMode::NonReturning, EndMode::Repetitive, "ab")
        .state("q0").state("q1", "a").state("q2", "b")
        .initial("q0")
        .on("q0", 'a', "q1").accept_at_marker("q0")
        .on("q1", 'b', "q2")
        .marker("q2", "q0")
        .build();
}

TlAutomaton ab_or_abb_star() {
    return Builder("R_ab_abb", HeadMode::Returning, EndMode::Halting, "ab")
        .state("s").state("x1").state("x2").state("y1").state("y2").state("y3")
        .initial("s").final("s").final("x2").final("y3")
        .on("s", 'a', "x1").on("x1", 'b', "x2").on("x2", 'a', "x1")
        .on("s", 'a', "y1").on("y1", 'b', "y2").on("y2", 'b', "y3").on("y3", 'a', "y1")
        .build();
}

TlAutomaton marker_loop() {
    return Builder("marker_loop", HeadMode::Returning, EndMode::Repetitive, "ab")
        .state("q0", "b").state("q1")
        .initial("q0")
        .on("q0", 'a', "q1").marker("q0", "q0")
        .build();
}

TlAutomaton accept_all() {
    return Builder("accept_all", HeadMode::Returning, EndMode::Repetitive, "ab")
        .state("q0")
        .initial("q0")
        .on("q0", 'a', "q0").on("q0", 'b', "q0").accept_at_marker("q0")
        .build();
}

TlAutomaton rowjfa_eq() {
    return Builder("rowjfa_eq", HeadMode::RotatingJump, EndMode::Halting, "ab")
        .state("q0").state("q1").state("q2")
        .initial("q0").final("q0")
        .on("q0", 'a', "q1").on("q0", 'b', "q2")
        .on("q1", 'b', "q0").on("q2", 'a', "q0")
        .build();
}

std::vector<Fixture> all() {
    return {
        {"a_vee_c.tla", a_vee_c(), "L_vee_c"},
        {"l_eq.tla", l_eq(), "L_eq"},
        {"l_2eq.tla", l_2eq(), "L_2eq"},
        {"l_2eq_prime.tla", l_2eq_prime(), "L_2eq_prime"},
        {"l_geq.tla", l_geq(), "L_geq"},
        {"l_c_rev.tla", l_c_rev(), "L_c_rev"},
        {"single_c.tla", single_c(), "L_single_c"},
        {"l_2_nr.tla", l_2_nonreturning(), "L_2"},
        {"ab_or_abb_star.tla", ab_or_abb_star(), "R_ab_abb"},
        {"marker_loop.tla", marker_loop(), ""},
        {"accept_all.tla", accept_all(), ""},
        {"rowjfa_eq.tla", rowjfa_eq(), "L_eq"},
    };
}

}  // namespace tla::fixtures
