#include "tla/engine.hpp"

#include <deque>
#include <sstream>
#include <unordered_set>

namespace tla {

namespace {

// Whole tape with the head offset; `head` is 0 except for non-returning
// automata. `origin[i]` is the input index of `letters[i]`.
struct Tape {
    std::string letters;
    std::vector<std::uint32_t> origin;
    std::size_t head = 0;
    StateIndex state = 0;
};

struct Outcome {
    std::optional<Tape> next;
    Verdict verdict = Verdict::Reject;
    StepKind kind;
};

Tape initial_tape(std::string_view word, StateIndex q) {
    Tape t;
    t.letters.assign(word.begin(), word.end());
    t.origin.resize(word.size());
    for (std::uint32_t i = 0; i < word.size(); ++i) t.origin[i] = i;
    t.state = q;
    return t;
}

Configuration to_configuration(const CompiledAutomaton& aut, const Tape& t) {
    return {t.letters.substr(0, t.head), aut.name(t.state), t.letters.substr(t.head)};
}

std::string visit_key(const Tape& t) {
    std::string key = t.letters;
    key.push_back('\x01');
    key += std::to_string(t.head);
    key.push_back('\x01');
    key += std::to_string(t.state);
    return key;
}

void expand(const CompiledAutomaton& aut, const Tape& t, std::vector<Outcome>& out) {
    out.clear();
    const StateIndex q = t.state;
    const std::size_t n = t.letters.size();
    std::size_t i = aut.head_mode() == HeadMode::NonReturning ? t.head : 0;
    while (i < n && aut.translucent(q, aut.letter_index(t.letters[i]))) ++i;

    if (i < n) {
        const Letter a = t.letters[i];
        const auto& targets = aut.targets(q, aut.letter_index(a));
        if (targets.empty()) {
            out.push_back({std::nullopt, Verdict::Reject, StepKind::terminal()});
            return;
        }
        Tape base;
        if (aut.head_mode() == HeadMode::RotatingJump) {
            base.letters = t.letters.substr(i + 1) + t.letters.substr(0, i);
            base.origin.assign(t.origin.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.origin.end());
            base.origin.insert(base.origin.end(), t.origin.begin(),
                               t.origin.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            base.letters = t.letters;
            base.letters.erase(i, 1);
            base.origin = t.origin;
            base.origin.erase(base.origin.begin() + static_cast<std::ptrdiff_t>(i));
            base.head = aut.head_mode() == HeadMode::NonReturning ? i : 0;
        }
        const StepKind kind = StepKind::read(a, i, t.origin[i]);
        for (StateIndex p : targets) {
            Tape next = base;
            next.state = p;
            out.push_back({std::move(next), Verdict::Reject, kind});
        }
        return;
    }

    // Every letter right of the head is translucent (or unreadable).
    if (aut.head_mode() == HeadMode::RotatingJump) {
        const bool accept = aut.is_final(q) && n == 0;
        out.push_back({std::nullopt, accept ? Verdict::Accept : Verdict::Reject, StepKind::terminal()});
        return;
    }
    if (aut.end_mode() == EndMode::Halting) {
        out.push_back({std::nullopt, aut.is_final(q) ? Verdict::Accept : Verdict::Reject,
                       StepKind::terminal()});
        return;
    }
    if (aut.accepts_at_marker(q)) {
        out.push_back({std::nullopt, Verdict::Accept, StepKind::terminal()});
        return;
    }
    if (aut.marker_targets(q).empty()) {
        out.push_back({std::nullopt, Verdict::Reject, StepKind::terminal()});
        return;
    }
    for (StateIndex p : aut.marker_targets(q)) {
        Tape next = t;
        next.head = 0;
        next.state = p;
        out.push_back({std::move(next), Verdict::Reject, StepKind::marker()});
    }
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Accept: return "Accept";
        case Verdict::Reject: return "Reject";
        case Verdict::StepLimit: return "StepLimit";
    }
    return "?";
}

std::vector<Successor> step(const TlAutomaton& aut, const Configuration& cfg) {
    CompiledAutomaton compiled(aut);
    compiled.check_word(cfg.consumed_prefix);
    compiled.check_word(cfg.remaining);
    if (!cfg.consumed_prefix.empty() && aut.head_mode != HeadMode::NonReturning) {
        throw Error("only non-returning configurations have a consumed prefix");
    }
    Tape t = initial_tape(cfg.consumed_prefix + cfg.remaining, compiled.index(cfg.state));
    t.head = cfg.consumed_prefix.size();

    std::vector<Outcome> outcomes;
    expand(compiled, t, outcomes);
    std::vector<Successor> out;
    for (const Outcome& o : outcomes) {
        Successor s;
        s.verdict = o.verdict;
        s.kind = o.kind;
        if (o.next) s.configuration = to_configuration(compiled, *o.next);
        out.push_back(std::move(s));
    }
    return out;
}

std::size_t default_step_limit(const CompiledAutomaton& aut, std::size_t word_length) {
    const std::size_t sigma = aut.alphabet().size();
    const std::size_t states = aut.state_count();
    return word_length * (sigma + 1) + (states + 1) * (word_length + 1);
}

Trace Engine::run_deterministic(std::string_view word, std::optional<std::size_t> step_limit) const {
    if (!aut_.deterministic()) throw VariantError("run_deterministic needs a deterministic automaton");
    aut_.check_word(word);
    const std::size_t limit = step_limit.value_or(default_step_limit(aut_, word.size()));

    Trace trace;
    Tape t = initial_tape(word, aut_.initial().front());
    std::vector<Outcome> outcomes;
    while (true) {
        if (trace.steps.size() == limit) {
            trace.steps.push_back({to_configuration(aut_, t), StepKind::terminal()});
            trace.verdict = Verdict::StepLimit;
            return trace;
        }
        expand(aut_, t, outcomes);
        Outcome& o = outcomes.front();
        trace.steps.push_back({to_configuration(aut_, t), o.kind});
        if (!o.next) {
            trace.verdict = o.verdict;
            return trace;
        }
        t = std::move(*o.next);
    }
}

SearchResult Engine::run_nondeterministic(std::string_view word, std::size_t max_configs) const {
    aut_.check_word(word);
    struct Node {
        Tape tape;
        std::ptrdiff_t parent;
        StepKind via;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::string> visited;
    std::deque<std::size_t> queue;
    SearchResult result;

    auto push = [&](Tape tape, std::ptrdiff_t parent, StepKind via) {
        if (!visited.insert(visit_key(tape)).second) return;
        nodes.push_back({std::move(tape), parent, via});
        queue.push_back(nodes.size() - 1);
    };
    for (StateIndex q : aut_.initial()) push(initial_tape(word, q), -1, StepKind::terminal());

    std::vector<Outcome> outcomes;
    while (!queue.empty()) {
        if (nodes.size() > max_configs) {
            result.verdict = Verdict::StepLimit;
            result.configurations_explored = nodes.size();
            return result;
        }
        const std::size_t current = queue.front();
        queue.pop_front();
        expand(aut_, nodes[current].tape, outcomes);
        for (Outcome& o : outcomes) {
            if (o.next) {
                push(std::move(*o.next), static_cast<std::ptrdiff_t>(current), o.kind);
                continue;
            }
            if (o.verdict != Verdict::Accept) continue;
            std::vector<std::size_t> path;
            for (auto at = static_cast<std::ptrdiff_t>(current); at >= 0; at = nodes[static_cast<std::size_t>(at)].parent) {
                path.push_back(static_cast<std::size_t>(at));
            }
            Trace witness;
            witness.verdict = Verdict::Accept;
            for (auto it = path.rbegin(); it != path.rend(); ++it) {
                auto next = std::next(it);
                StepKind kind = next == path.rend() ? StepKind::terminal() : nodes[*next].via;
                witness.steps.push_back({to_configuration(aut_, nodes[*it].tape), kind});
            }
            result.verdict = Verdict::Accept;
            result.witness = std::move(witness);
            result.configurations_explored = nodes.size();
            return result;
        }
    }
    result.verdict = Verdict::Reject;
    result.configurations_explored = nodes.size();
    return result;
}

bool Engine::accepts(std::string_view word) const {
    if (aut_.deterministic()) {
        Trace trace = run_deterministic(word);
        if (trace.verdict != Verdict::StepLimit) return trace.verdict == Verdict::Accept;
    }
    SearchResult result = run_nondeterministic(word);
    if (result.verdict == Verdict::StepLimit) {
        throw StepLimitError("configuration limit exhausted on '" + std::string(word) + "'");
    }
    return result.verdict == Verdict::Accept;
}

Trace run_deterministic(const TlAutomaton& aut, std::string_view word,
                        std::optional<std::size_t> step_limit) {
    return Engine(aut).run_deterministic(word, step_limit);
}

SearchResult run_nondeterministic(const TlAutomaton& aut, std::string_view word,
                                  std::size_t max_configs) {
    return Engine(aut).run_nondeterministic(word, max_configs);
}

bool accepts(const TlAutomaton& aut, std::string_view word) { return Engine(aut).accepts(word); }

std::string render_configuration(const Configuration& cfg) {
    std::string out;
    if (!cfg.consumed_prefix.empty()) out += cfg.consumed_prefix + " ";
    out += cfg.state + " " + cfg.remaining + std::string(kEndMarker);
    return out;
}

std::string render_trace(const Trace& trace) {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (i > 0) out << "|- ";
        out << render_configuration(trace.steps[i].configuration) << '\n';
    }
    out << "|- " << to_string(trace.verdict) << '\n';
    return out.str();
}

}  // namespace tla
