#include "tla/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tla {

namespace {

void require_variant(const TlAutomaton& aut, std::initializer_list<HeadMode> heads, EndMode end,
                     std::string_view construction) {
    require_valid(aut);
    const bool head_ok = std::find(heads.begin(), heads.end(), aut.head_mode) != heads.end();
    if (!head_ok || aut.end_mode != end) {
        throw VariantError(std::string(construction) + ": unsupported input variant " +
                           canonical_name(is_deterministic(aut), aut.head_mode, aut.end_mode));
    }
}

void require_deterministic(const TlAutomaton& aut, std::string_view construction) {
    if (!is_deterministic(aut)) {
        throw VariantError(std::string(construction) + ": input must be deterministic");
    }
}

/// Accepts DFAwtl/NFAwtl by embedding them; leaves repetitive returning input alone.
TlAutomaton as_repetitive_returning(const TlAutomaton& aut, std::string_view construction) {
    require_valid(aut);
    if (aut.head_mode == HeadMode::Returning && aut.end_mode == EndMode::Halting) {
        return embed_repetitive(aut);
    }
    require_variant(aut, {HeadMode::Returning}, EndMode::Repetitive, construction);
    return aut;
}

std::set<State> taken_names(const TlAutomaton& aut) { return {aut.states.begin(), aut.states.end()}; }

std::string join_letters(const LetterSet& letters, const Alphabet& alphabet) {
    std::string out;
    for (Letter a : alphabet.letters()) {
        if (!letters.count(a)) continue;
        if (!out.empty()) out += ',';
        out += a;
    }
    return out;
}

void add_state(TlAutomaton& aut, const State& q) { aut.states.push_back(q); }

/// Keeps only informative map entries.
void tidy(TlAutomaton& aut) {
    std::erase_if(aut.translucency, [](const auto& e) { return e.second.empty(); });
    std::erase_if(aut.letter_transitions, [](const auto& e) { return e.second.empty(); });
    std::erase_if(aut.end_transitions, [](const auto& e) {
        return !e.second.is_accept() && e.second.targets().empty();
    });
}

/// Copy of `aut` without any states or tables.
TlAutomaton empty_like(const TlAutomaton& aut) {
    TlAutomaton out;
    out.name = aut.name;
    out.head_mode = aut.head_mode;
    out.end_mode = aut.end_mode;
    out.alphabet = aut.alphabet;
    return out;
}

/// Single non-accepting state; deterministic.
TlAutomaton empty_language(const TlAutomaton& like) {
    TlAutomaton out = empty_like(like);
    out.states = {"q0"};
    out.initial = {"q0"};
    return out;
}

}  // namespace

TlAutomaton prune_unreachable(const TlAutomaton& aut) {
    std::set<State> seen(aut.initial.begin(), aut.initial.end());
    std::deque<State> queue(aut.initial.begin(), aut.initial.end());
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        auto visit = [&](const State& p) {
            if (seen.insert(p).second) queue.push_back(p);
        };
        for (Letter a : aut.alphabet.letters()) {
            for (const State& p : aut.targets(q, a)) visit(p);
        }
        for (const State& p : aut.end_action(q).targets()) visit(p);
    }
    TlAutomaton out = empty_like(aut);
    out.initial = aut.initial;
    for (const State& q : aut.states) {
        if (!seen.count(q)) continue;
        out.states.push_back(q);
        if (aut.finals.count(q)) out.finals.insert(q);
        if (!aut.translucent(q).empty()) out.translucency[q] = aut.translucent(q);
        if (auto it = aut.end_transitions.find(q); it != aut.end_transitions.end()) {
            out.end_transitions.emplace(q, it->second);
        }
    }
    for (const auto& [key, targets] : aut.letter_transitions) {
        if (seen.count(key.first)) out.letter_transitions[key] = targets;
    }
    tidy(out);
    return out;
}

TlAutomaton embed_repetitive(const TlAutomaton& aut) {
    require_variant(aut, {HeadMode::Returning}, EndMode::Halting, "embed_repetitive");
    TlAutomaton out = aut;
    out.end_mode = EndMode::Repetitive;
    out.finals.clear();
    for (const State& q : aut.finals) out.end_transitions.emplace(q, EndAction::accept());
    tidy(out);
    return out;
}

TlAutomaton nrnr_to_nfa(const TlAutomaton& aut) {
    require_variant(aut, {HeadMode::NonReturning}, EndMode::Halting, "nrnr_to_nfa");
    TlAutomaton out = empty_like(aut);
    out.head_mode = HeadMode::Returning;
    out.states = aut.states;
    out.initial = aut.initial;
    out.finals = aut.finals;
    for (const State& q : aut.states) {
        for (Letter a : aut.alphabet.letters()) {
            if (aut.translucent(q).count(a)) {
                out.letter_transitions[{q, a}] = {q};
            } else if (!aut.targets(q, a).empty()) {
                out.letter_transitions[{q, a}] = aut.targets(q, a);
            }
        }
    }
    return out;
}

TlAutomaton repetitive_to_nonreturning(const TlAutomaton& aut) {
    require_variant(aut, {HeadMode::Returning}, EndMode::Repetitive, "repetitive_to_nonreturning");
    TlAutomaton out = empty_like(aut);
    out.head_mode = HeadMode::NonReturning;
    out.states = aut.states;
    out.initial = aut.initial;

    std::set<State> taken = taken_names(aut);
    std::map<State, State> primed;
    for (const State& q : aut.states) {
        primed[q] = fresh_state(q + "'", taken);
        taken.insert(primed[q]);
        out.states.push_back(primed[q]);
    }
    const LetterSet everything = aut.alphabet.as_set();
    for (const State& q : aut.states) {
        if (!aut.translucent(q).empty()) out.translucency[q] = aut.translucent(q);
        if (!everything.empty()) out.translucency[primed[q]] = everything;
        for (Letter a : aut.alphabet.letters()) {
            StateSet targets;
            for (const State& p : aut.targets(q, a)) targets.insert(primed[p]);
            if (!targets.empty()) out.letter_transitions[{q, a}] = targets;
        }
        // Marker moves of the source carry over unchanged: at an unprimed
        // state the head starts from the left end, as in the source.
        out.end_transitions.emplace(q, aut.end_action(q));
        out.end_transitions.emplace(primed[q], EndAction::to({q}));
    }
    tidy(out);
    return out;
}

TlAutomaton eliminate_end_loops(const TlAutomaton& aut) {
    require_variant(aut, {HeadMode::Returning, HeadMode::NonReturning}, EndMode::Repetitive,
                    "eliminate_end_loops");
    std::map<State, std::size_t> position;
    for (std::size_t i = 0; i < aut.states.size(); ++i) position[aut.states[i]] = i;

    using Visited = std::vector<bool>;
    auto name = [&aut](const State& q, const Visited& visited) {
        std::string out = "(" + q + "|S:";
        bool first = true;
        for (std::size_t i = 0; i < visited.size(); ++i) {
            if (!visited[i]) continue;
            if (!first) out += ',';
            out += aut.states[i];
            first = false;
        }
        return out + ")";
    };

    TlAutomaton out = empty_like(aut);
    std::set<State> built;
    std::deque<std::pair<State, Visited>> queue;
    auto reach = [&](const State& q, const Visited& visited) {
        State n = name(q, visited);
        if (built.insert(n).second) {
            out.states.push_back(n);
            queue.emplace_back(q, visited);
        }
        return n;
    };
    const Visited none(aut.states.size(), false);
    std::vector<State> initial_order(aut.initial.begin(), aut.initial.end());
    std::sort(initial_order.begin(), initial_order.end(),
              [&position](const State& x, const State& y) { return position[x] < position[y]; });
    for (const State& q : initial_order) out.initial.insert(reach(q, none));

    while (!queue.empty()) {
        auto [q, visited] = queue.front();
        queue.pop_front();
        const State self = name(q, visited);
        if (!aut.translucent(q).empty()) out.translucency[self] = aut.translucent(q);
        for (Letter a : aut.alphabet.letters()) {
            StateSet targets;
            for (const State& p : aut.targets(q, a)) targets.insert(reach(p, none));
            if (!targets.empty()) out.letter_transitions[{self, a}] = targets;
        }
        const EndAction& action = aut.end_action(q);
        if (action.is_accept()) {
            out.end_transitions.emplace(self, EndAction::accept());
            continue;
        }
        const std::size_t at = position[q];
        if (visited[at]) continue;
        Visited extended = visited;
        extended[at] = true;
        StateSet targets;
        for (const State& p : action.targets()) targets.insert(reach(p, extended));
        if (!targets.empty()) out.end_transitions.emplace(self, EndAction::to(targets));
    }
    return out;
}

TlAutomaton complete_reading(const TlAutomaton& aut) {
    require_variant(aut, {HeadMode::Returning, HeadMode::NonReturning}, EndMode::Repetitive,
                    "complete_reading");
    TlAutomaton out = aut;
    const State sink = fresh_state("q_e", taken_names(aut));
    for (auto& [q, action] : out.end_transitions) {
        if (action.is_accept()) action = EndAction::to({sink});
    }
    add_state(out, sink);
    for (Letter a : aut.alphabet.letters()) out.letter_transitions[{sink, a}] = {sink};
    out.end_transitions.emplace(sink, EndAction::accept());
    return out;
}

TlAutomaton normalize(const TlAutomaton& aut) { return complete_reading(eliminate_end_loops(aut)); }

TlAutomaton repetitive_to_plain(const TlAutomaton& aut) {
    require_variant(aut, {HeadMode::Returning}, EndMode::Repetitive, "repetitive_to_plain");
    const TlAutomaton src = normalize(aut);
    const Alphabet& sigma = src.alphabet;

    using Node = std::pair<State, LetterSet>;
    auto name = [&sigma](const Node& node) {
        return "(" + node.first + "|G:" + join_letters(node.second, sigma) + ")";
    };
    // Everything reachable from `start` through zero or more marker moves;
    // each move out of r leaves only letters translucent for r on the tape.
    auto marker_closure = [&src](const Node& start) {
        std::vector<Node> order{start};
        std::set<Node> seen{start};
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto [r, gamma] = order[i];
            const EndAction& action = src.end_action(r);
            if (action.is_accept()) continue;
            LetterSet narrowed;
            std::set_intersection(gamma.begin(), gamma.end(), src.translucent(r).begin(),
                                  src.translucent(r).end(), std::inserter(narrowed, narrowed.end()));
            for (const State& p : action.targets()) {
                Node next{p, narrowed};
                if (seen.insert(next).second) order.push_back(next);
            }
        }
        return order;
    };

    TlAutomaton out = empty_like(src);
    out.end_mode = EndMode::Halting;
    std::set<Node> built;
    std::deque<Node> queue;
    auto reach = [&](const Node& node) {
        if (built.insert(node).second) {
            out.states.push_back(name(node));
            queue.push_back(node);
        }
        return name(node);
    };
    for (const State& q : src.initial) {
        for (const Node& node : marker_closure({q, sigma.as_set()})) out.initial.insert(reach(node));
    }
    while (!queue.empty()) {
        const Node node = queue.front();
        queue.pop_front();
        const auto& [q, gamma] = node;
        const State self = name(node);
        LetterSet hidden;
        for (Letter a : src.translucent(q)) {
            if (gamma.count(a)) hidden.insert(a);
        }
        if (!hidden.empty()) out.translucency[self] = hidden;
        if (src.end_action(q).is_accept()) out.finals.insert(self);
        for (Letter a : sigma.letters()) {
            if (!gamma.count(a)) continue;
            StateSet targets;
            for (const State& p : src.targets(q, a)) {
                for (const Node& next : marker_closure({p, gamma})) targets.insert(reach(next));
            }
            if (!targets.empty()) out.letter_transitions[{self, a}] = targets;
        }
    }
    return out;
}

TlAutomaton complement_deterministic(const TlAutomaton& aut) {
    const TlAutomaton embedded = as_repetitive_returning(aut, "complement_deterministic");
    require_deterministic(embedded, "complement_deterministic");
    const TlAutomaton src = normalize(embedded);

    TlAutomaton out = src;
    const State sink = fresh_state("q_a", taken_names(src));
    for (const State& q : src.states) {
        for (Letter a : src.alphabet.letters()) {
            if (src.targets(q, a).empty() && !src.translucent(q).count(a)) {
                out.letter_transitions[{q, a}] = {sink};
            }
        }
        const EndAction& action = src.end_action(q);
        if (action.is_accept()) {
            out.end_transitions.erase(q);
        } else if (action.targets().empty()) {
            out.end_transitions.insert_or_assign(q, EndAction::to({sink}));
        }
    }
    add_state(out, sink);
    for (Letter a : src.alphabet.letters()) out.letter_transitions[{sink, a}] = {sink};
    out.end_transitions.emplace(sink, EndAction::accept());
    tidy(out);
    return out;
}

TlAutomaton complete_all_computations(const TlAutomaton& aut) {
    const TlAutomaton src = normalize(as_repetitive_returning(aut, "complete_all_computations"));
    TlAutomaton out = src;
    const State sink = fresh_state("q_r", taken_names(src));
    bool used = false;
    for (const State& q : src.states) {
        for (Letter a : src.alphabet.letters()) {
            if (src.targets(q, a).empty() && !src.translucent(q).count(a)) {
                out.letter_transitions[{q, a}] = {sink};
                used = true;
            }
        }
        const EndAction& action = src.end_action(q);
        if (!action.is_accept() && action.targets().empty()) {
            out.end_transitions.insert_or_assign(q, EndAction::to({sink}));
            used = true;
        }
    }
    if (!used) return src;
    add_state(out, sink);
    for (Letter a : src.alphabet.letters()) out.letter_transitions[{sink, a}] = {sink};
    return out;
}

namespace {

struct FirstLetterResult {
    TlAutomaton automaton;
    std::size_t repeated_letter_cases = 0;
    std::size_t halting_marker_cases = 0;
    bool split_initial = false;
};

FirstLetterResult first_letter_impl(const TlAutomaton& aut) {
    const TlAutomaton embedded = as_repetitive_returning(aut, "first_letter_normalize");
    require_deterministic(embedded, "first_letter_normalize");
    TlAutomaton a = prune_unreachable(complete_all_computations(embedded));
    FirstLetterResult result;

    // The initial state must not be entered again.
    State start = *a.initial.begin();
    bool entered = false;
    for (const auto& [key, targets] : a.letter_transitions) entered |= targets.count(start) > 0;
    for (const auto& [q, action] : a.end_transitions) entered |= action.targets().count(start) > 0;
    if (entered) {
        const State copy = fresh_state(start, taken_names(a));
        a.states.insert(a.states.begin(), copy);
        if (!a.translucent(start).empty()) a.translucency[copy] = a.translucent(start);
        for (Letter x : a.alphabet.letters()) {
            if (!a.targets(start, x).empty()) a.letter_transitions[{copy, x}] = a.targets(start, x);
        }
        if (auto it = a.end_transitions.find(start); it != a.end_transitions.end()) {
            a.end_transitions.emplace(copy, it->second);
        }
        a.initial = {copy};
        start = copy;
        result.split_initial = true;
    }

    auto single = [](const StateSet& set) -> std::optional<State> {
        if (set.empty()) return std::nullopt;
        return *set.begin();
    };
    auto held = [](const State& q, Letter x) { return "(" + q + "|L:" + std::string(1, x) + ")"; };

    TlAutomaton out = empty_like(a);
    out.states = a.states;
    out.initial = {start};
    for (const State& q : a.states) {
        for (Letter x : a.alphabet.letters()) {
            if (a.translucent(q).count(x)) out.states.push_back(held(q, x));
        }
    }

    // Where the source goes after leaving q towards p while x is still held:
    // keep holding x if p cannot see it, otherwise read it at once.
    auto after_hold = [&](const State& p, Letter x) -> StateSet {
        if (a.translucent(p).count(x)) return {held(p, x)};
        return a.targets(p, x);
    };

    for (const State& q : a.states) {
        if (q == start) {
            for (Letter x : a.alphabet.letters()) {
                if (a.translucent(q).count(x)) {
                    out.letter_transitions[{q, x}] = {held(q, x)};
                } else if (!a.targets(q, x).empty()) {
                    out.letter_transitions[{q, x}] = a.targets(q, x);
                }
            }
        } else {
            if (!a.translucent(q).empty()) out.translucency[q] = a.translucent(q);
            for (Letter x : a.alphabet.letters()) {
                if (!a.targets(q, x).empty()) out.letter_transitions[{q, x}] = a.targets(q, x);
            }
        }
        if (auto it = a.end_transitions.find(q); it != a.end_transitions.end()) {
            out.end_transitions.emplace(q, it->second);
        }

        for (Letter x : a.alphabet.letters()) {
            if (!a.translucent(q).count(x)) continue;
            const State self = held(q, x);
            out.translucency[self] = a.translucent(q);
            for (Letter b : a.alphabet.letters()) {
                if (a.translucent(q).count(b)) continue;
                // b == x is impossible here: x is translucent for q.
                if (auto p = single(a.targets(q, b))) {
                    StateSet targets = after_hold(*p, x);
                    if (!targets.empty()) out.letter_transitions[{self, b}] = targets;
                }
            }
            const EndAction& action = a.end_action(q);
            if (action.is_accept() || action.targets().empty()) {
                // The held letter is still on the source's tape, so the source
                // cannot halt here; complete reading makes this unreachable.
                ++result.halting_marker_cases;
                continue;
            }
            StateSet targets = after_hold(*action.targets().begin(), x);
            if (!targets.empty()) out.end_transitions.emplace(self, EndAction::to(targets));
        }
    }
    for (const State& q : a.states) {
        for (Letter x : a.alphabet.letters()) {
            if (a.translucent(q).count(x)) ++result.repeated_letter_cases;
        }
    }
    tidy(out);
    result.automaton = prune_unreachable(out);
    return result;
}

}  // namespace

TlAutomaton first_letter_normalize(const TlAutomaton& aut) { return first_letter_impl(aut).automaton; }

TlAutomaton left_quotient(const TlAutomaton& aut, std::string_view word) {
    TlAutomaton current = as_repetitive_returning(aut, "left_quotient");
    require_deterministic(current, "left_quotient");
    for (Letter c : word) {
        if (!current.alphabet.contains(c)) {
            throw Error(std::string("left_quotient: letter '") + c + "' is not in the alphabet");
        }
        TlAutomaton b = first_letter_normalize(current);
        const auto& next = b.targets(*b.initial.begin(), c);
        if (next.empty()) return empty_language(current);
        b.initial = next;
        current = canonicalize(prune_unreachable(b));
    }
    return current;
}

TlAutomaton disjoint_shuffle(const TlAutomaton& first, const TlAutomaton& second) {
    TlAutomaton a = normalize(as_repetitive_returning(first, "disjoint_shuffle"));
    TlAutomaton b = as_repetitive_returning(second, "disjoint_shuffle");
    for (Letter x : a.alphabet.letters()) {
        if (b.alphabet.contains(x)) {
            throw Error(std::string("disjoint_shuffle: letter '") + x + "' occurs in both alphabets");
        }
    }
    bool overlap = false;
    for (const State& q : b.states) overlap |= a.has_state(q);
    if (overlap) {
        std::map<State, State> ra, rb;
        for (const State& q : a.states) ra[q] = "A." + q;
        for (const State& q : b.states) rb[q] = "B." + q;
        a = rename_states(a, ra);
        b = rename_states(b, rb);
    }

    std::vector<Letter> letters = a.alphabet.letters();
    letters.insert(letters.end(), b.alphabet.letters().begin(), b.alphabet.letters().end());
    TlAutomaton out;
    out.name = a.name.empty() || b.name.empty() ? "" : a.name + "_shuffle_" + b.name;
    out.head_mode = HeadMode::Returning;
    out.end_mode = EndMode::Repetitive;
    out.alphabet = Alphabet(letters);
    out.states = a.states;
    out.states.insert(out.states.end(), b.states.begin(), b.states.end());
    out.initial = a.initial;

    const LetterSet second_letters = b.alphabet.as_set();
    for (const State& q : a.states) {
        LetterSet hidden = a.translucent(q);
        hidden.insert(second_letters.begin(), second_letters.end());
        if (!hidden.empty()) out.translucency[q] = hidden;
        const EndAction& action = a.end_action(q);
        out.end_transitions.emplace(q, action.is_accept() ? EndAction::to(b.initial) : action);
    }
    for (const State& q : b.states) {
        if (!b.translucent(q).empty()) out.translucency[q] = b.translucent(q);
        out.end_transitions.emplace(q, b.end_action(q));
    }
    out.letter_transitions = a.letter_transitions;
    out.letter_transitions.insert(b.letter_transitions.begin(), b.letter_transitions.end());
    tidy(out);
    return out;
}

ConstructionResult run_construction(const std::string& name, const TlAutomaton& aut,
                                    const TlAutomaton* second) {
    ConstructionResult result;
    ConstructionReport& report = result.report;
    report.construction = name;
    report.input = classify(aut);
    const bool halting_returning =
        aut.head_mode == HeadMode::Returning && aut.end_mode == EndMode::Halting;

    if (name == "embed") {
        result.automaton = embed_repetitive(aut);
    } else if (name == "nrnr-to-nfa") {
        result.automaton = nrnr_to_nfa(aut);
    } else if (name == "to-nonreturning") {
        result.automaton = repetitive_to_nonreturning(aut);
    } else if (name == "eliminate-loops") {
        result.automaton = eliminate_end_loops(aut);
    } else if (name == "complete-reading") {
        result.automaton = complete_reading(aut);
    } else if (name == "normalize") {
        result.automaton = normalize(aut);
    } else if (name == "to-plain") {
        result.automaton = repetitive_to_plain(aut);
        report.notes.push_back("input normalized before conversion");
    } else if (name == "complement") {
        result.automaton = complement_deterministic(aut);
        report.notes.push_back("input normalized before complementing");
    } else if (name == "first-letter") {
        FirstLetterResult r = first_letter_impl(aut);
        result.automaton = std::move(r.automaton);
        report.notes.push_back("input normalized and made to read every input completely");
        if (r.split_initial) report.notes.push_back("initial state split off (it was re-entered)");
        report.notes.push_back(std::to_string(r.repeated_letter_cases) +
                               " held-letter states; reading the held letter again is blocked by translucency");
        report.notes.push_back(std::to_string(r.halting_marker_cases) +
                               " held-letter states whose source halts at the marker (unreachable)");
    } else if (name.rfind("quotient:", 0) == 0) {
        result.automaton = left_quotient(aut, name.substr(9));
        report.notes.push_back("input made to read its first letter first, once per quotient letter");
    } else if (name == "shuffle") {
        if (second == nullptr) throw Error("shuffle needs a second automaton");
        result.automaton = disjoint_shuffle(aut, *second);
        report.notes.push_back("first operand normalized before chaining");
    } else {
        throw Error("unknown construction '" + name + "'");
    }
    if (halting_returning && name != "embed" && name != "nrnr-to-nfa") {
        report.notes.push_back("halting input embedded as a repetitive automaton");
    }
    if (result.automaton.name.empty()) result.automaton.name = aut.name;
    report.output = classify(result.automaton);
    const std::size_t before = std::max<std::size_t>(1, aut.states.size());
    report.state_blowup = static_cast<double>(result.automaton.states.size()) / static_cast<double>(before);
    return result;
}

}  // namespace tla
