#include "tla/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace tla {

namespace {

const LetterSet kNoLetters;
const StateSet kNoStates;
const EndAction kRejectAtMarker = EndAction::to({});

}  // namespace

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!is_valid_letter(letters_[i])) {
            throw Error(std::string("invalid letter '") + letters_[i] + "' in alphabet");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (letters_[j] == letters_[i]) {
                throw Error(std::string("duplicate letter '") + letters_[i] + "' in alphabet");
            }
        }
    }
}

bool Alphabet::contains(Letter a) const noexcept { return index_of(a) >= 0; }

int Alphabet::index_of(Letter a) const noexcept {
    auto it = std::find(letters_.begin(), letters_.end(), a);
    return it == letters_.end() ? -1 : static_cast<int>(it - letters_.begin());
}

bool is_valid_letter(Letter a) noexcept {
    return a > ' ' && a < 0x7f && a != '<' && a != '|';
}

std::string_view to_string(HeadMode mode) {
    switch (mode) {
        case HeadMode::Returning: return "returning";
        case HeadMode::NonReturning: return "non_returning";
        case HeadMode::RotatingJump: return "rotating_jump";
    }
    return "?";
}

std::string_view to_string(EndMode mode) {
    return mode == EndMode::Halting ? "halting" : "repetitive";
}

std::optional<HeadMode> parse_head_mode(std::string_view text) {
    for (auto mode : {HeadMode::Returning, HeadMode::NonReturning, HeadMode::RotatingJump}) {
        if (to_string(mode) == text) return mode;
    }
    return std::nullopt;
}

std::optional<EndMode> parse_end_mode(std::string_view text) {
    for (auto mode : {EndMode::Halting, EndMode::Repetitive}) {
        if (to_string(mode) == text) return mode;
    }
    return std::nullopt;
}

const StateSet& EndAction::targets() const { return targets_ ? *targets_ : kNoStates; }

bool TlAutomaton::has_state(const State& q) const {
    return std::find(states.begin(), states.end(), q) != states.end();
}

const LetterSet& TlAutomaton::translucent(const State& q) const {
    auto it = translucency.find(q);
    return it == translucency.end() ? kNoLetters : it->second;
}

const StateSet& TlAutomaton::targets(const State& q, Letter a) const {
    auto it = letter_transitions.find({q, a});
    return it == letter_transitions.end() ? kNoStates : it->second;
}

const EndAction& TlAutomaton::end_action(const State& q) const {
    auto it = end_transitions.find(q);
    return it == end_transitions.end() ? kRejectAtMarker : it->second;
}

LetterSet TlAutomaton::readable(const State& q) const {
    LetterSet out;
    for (Letter a : alphabet.letters()) {
        if (!targets(q, a).empty()) out.insert(a);
    }
    return out;
}

ValidationReport validate(const TlAutomaton& aut) {
    ValidationReport report;
    auto add = [&report](std::string message) { report.push_back({std::move(message)}); };
    std::set<State> known;
    for (const State& q : aut.states) {
        if (q.empty()) add("empty state name");
        if (!known.insert(q).second) add("duplicate state '" + q + "'");
    }
    auto check_state = [&](const State& q, const std::string& where) {
        if (!known.count(q)) add("unknown state '" + q + "' in " + where);
    };
    auto check_letter = [&](Letter a, const std::string& where) {
        if (!aut.alphabet.contains(a)) add(std::string("unknown letter '") + a + "' in " + where);
    };

    if (!aut.states.empty() && aut.initial.empty()) add("no initial state");
    for (const State& q : aut.initial) check_state(q, "initial");

    const bool jumping = aut.head_mode == HeadMode::RotatingJump;
    const bool repetitive = aut.end_mode == EndMode::Repetitive;
    if (jumping && repetitive) add("rotating-jump automata cannot be repetitive");
    if (repetitive && !aut.finals.empty()) add("repetitive automata have no final states");
    if (!repetitive && !aut.end_transitions.empty()) add("halting automata have no end transitions");
    if (jumping && !aut.translucency.empty()) add("rotating-jump automata have no translucency");

    for (const State& q : aut.finals) check_state(q, "finals");
    for (const auto& [q, letters] : aut.translucency) {
        check_state(q, "translucency");
        for (Letter a : letters) check_letter(a, "translucency of '" + q + "'");
    }
    for (const auto& [key, targets] : aut.letter_transitions) {
        const auto& [q, a] = key;
        const std::string where = "transition (" + q + "," + a + ")";
        check_state(q, where);
        check_letter(a, where);
        for (const State& p : targets) check_state(p, where);
        if (!targets.empty() && aut.translucent(q).count(a)) {
            add("translucency blocking at (" + q + "," + a + ")");
        }
    }
    for (const auto& [q, action] : aut.end_transitions) {
        const std::string where = "end transition of '" + q + "'";
        check_state(q, where);
        for (const State& p : action.targets()) check_state(p, where);
    }
    return report;
}

void require_valid(const TlAutomaton& aut) {
    auto report = validate(aut);
    if (report.empty()) return;
    std::ostringstream out;
    out << "invalid automaton";
    if (!aut.name.empty()) out << " '" << aut.name << "'";
    out << ": " << report.front().message;
    if (report.size() > 1) out << " (+" << report.size() - 1 << " more)";
    throw Error(out.str());
}

std::string canonical_name(bool deterministic, HeadMode head, EndMode end) {
    const char* kind = deterministic ? "DFAwtl" : "NFAwtl";
    switch (head) {
        case HeadMode::RotatingJump:
            return deterministic ? "ROWJFA" : "NROWJFA";
        case HeadMode::Returning:
            return (end == EndMode::Repetitive ? "R" : "") + std::string(kind);
        case HeadMode::NonReturning:
            return (end == EndMode::Repetitive ? "nr-" : "nr-nr-") + std::string(kind);
    }
    return kind;
}

bool is_deterministic(const TlAutomaton& aut) {
    if (aut.initial.size() != 1) return false;
    for (const auto& [key, targets] : aut.letter_transitions) {
        if (targets.size() > 1) return false;
    }
    for (const auto& [q, action] : aut.end_transitions) {
        if (action.targets().size() > 1) return false;
    }
    return true;
}

VariantDescriptor classify(const TlAutomaton& aut) {
    require_valid(aut);
    VariantDescriptor d;
    d.deterministic = is_deterministic(aut);
    d.head_mode = aut.head_mode;
    d.end_mode = aut.end_mode;
    d.canonical_name = canonical_name(d.deterministic, d.head_mode, d.end_mode);
    return d;
}

TlAutomaton rename_states(const TlAutomaton& aut, const std::map<State, State>& rename) {
    auto map = [&rename](const State& q) {
        auto it = rename.find(q);
        return it == rename.end() ? q : it->second;
    };
    auto map_set = [&map](const StateSet& set) {
        StateSet out;
        for (const State& q : set) out.insert(map(q));
        return out;
    };
    TlAutomaton out;
    out.name = aut.name;
    out.head_mode = aut.head_mode;
    out.end_mode = aut.end_mode;
    out.alphabet = aut.alphabet;
    for (const State& q : aut.states) out.states.push_back(map(q));
    for (const auto& [q, letters] : aut.translucency) out.translucency[map(q)] = letters;
    out.initial = map_set(aut.initial);
    out.finals = map_set(aut.finals);
    for (const auto& [key, targets] : aut.letter_transitions) {
        out.letter_transitions[{map(key.first), key.second}] = map_set(targets);
    }
    for (const auto& [q, action] : aut.end_transitions) {
        out.end_transitions.emplace(
            map(q), action.is_accept() ? EndAction::accept() : EndAction::to(map_set(action.targets())));
    }
    return out;
}

TlAutomaton canonicalize(const TlAutomaton& aut) {
    std::map<State, std::size_t> position;
    for (std::size_t i = 0; i < aut.states.size(); ++i) position[aut.states[i]] = i;
    auto by_position = [&position](const StateSet& set) {
        std::vector<State> out(set.begin(), set.end());
        std::sort(out.begin(), out.end(),
                  [&position](const State& x, const State& y) { return position[x] < position[y]; });
        return out;
    };

    std::vector<State> order;
    std::set<State> seen;
    std::deque<State> queue;
    auto visit = [&](const State& q) {
        if (seen.insert(q).second) {
            order.push_back(q);
            queue.push_back(q);
        }
    };
    for (const State& q : by_position(aut.initial)) visit(q);
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Letter a : aut.alphabet.letters()) {
            for (const State& p : by_position(aut.targets(q, a))) visit(p);
        }
        for (const State& p : by_position(aut.end_action(q).targets())) visit(p);
    }
    for (const State& q : aut.states) {
        if (!seen.count(q)) order.push_back(q);
    }

    std::map<State, State> rename;
    for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = "q" + std::to_string(i);
    TlAutomaton out = rename_states(aut, rename);
    out.states.clear();
    for (std::size_t i = 0; i < order.size(); ++i) out.states.push_back("q" + std::to_string(i));
    // Drop entries that carry no information so equal automata compare equal.
    std::erase_if(out.translucency, [](const auto& entry) { return entry.second.empty(); });
    std::erase_if(out.letter_transitions, [](const auto& entry) { return entry.second.empty(); });
    std::erase_if(out.end_transitions, [](const auto& entry) {
        return !entry.second.is_accept() && entry.second.targets().empty();
    });
    return out;
}

State fresh_state(const State& base, const std::set<State>& taken) {
    State candidate = base;
    while (taken.count(candidate)) candidate += '\'';
    return candidate;
}

}  // namespace tla
