#include "tla/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace tla {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw DocumentError("field '" + field + "': " + message);
}

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(key, "missing");
    return *it;
}

std::string as_string(const json& value, const std::string& field) {
    if (!value.is_string()) fail(field, "expected a string");
    return value.get<std::string>();
}

Letter as_letter(const json& value, const std::string& field) {
    std::string text = as_string(value, field);
    if (text.size() != 1) fail(field, "letters are single characters, got \"" + text + "\"");
    return text[0];
}

const json& as_array(const json& value, const std::string& field) {
    if (!value.is_array()) fail(field, "expected a list");
    return value;
}

StateSet as_states(const json& value, const std::string& field) {
    StateSet out;
    const json& list = as_array(value, field);
    for (std::size_t i = 0; i < list.size(); ++i) {
        out.insert(as_string(list[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

LetterSet as_letters(const json& value, const std::string& field) {
    LetterSet out;
    const json& list = as_array(value, field);
    for (std::size_t i = 0; i < list.size(); ++i) {
        out.insert(as_letter(list[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void reject_unknown(const json& object, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&key](const char* k) { return key == k; }) ==
            allowed.end()) {
            fail(where.empty() ? key : where + "." + key, "unknown field");
        }
    }
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

/// Orders state names by declaration position.
class StateOrder {
public:
    explicit StateOrder(const TlAutomaton& aut) {
        for (std::size_t i = 0; i < aut.states.size(); ++i) position_[aut.states[i]] = i;
    }
    json list(const StateSet& set) const {
        std::vector<State> out(set.begin(), set.end());
        std::sort(out.begin(), out.end(), [this](const State& x, const State& y) { return at(x) < at(y); });
        return out;
    }

private:
    std::size_t at(const State& q) const {
        auto it = position_.find(q);
        return it == position_.end() ? position_.size() : it->second;
    }
    std::map<State, std::size_t> position_;
};

json letter_list(const LetterSet& letters, const Alphabet& alphabet) {
    json out = json::array();
    for (Letter a : alphabet.letters()) {
        if (letters.count(a)) out.push_back(std::string(1, a));
    }
    return out;
}

}  // namespace

TlAutomaton parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw DocumentError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                            ": syntax error: " + e.what());
    }
    if (!doc.is_object()) throw DocumentError("line 1: a document is a JSON object");
    reject_unknown(doc,
                   {"format_version", "name", "variant", "alphabet", "states", "initial", "finals",
                    "translucency", "transitions", "end_transitions"},
                   "");

    const json& version = require(doc, "format_version");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
        fail("format_version", "expected " + std::to_string(kFormatVersion));
    }

    TlAutomaton aut;
    if (auto it = doc.find("name"); it != doc.end()) aut.name = as_string(*it, "name");

    const json& variant = require(doc, "variant");
    if (!variant.is_object()) fail("variant", "expected an object");
    reject_unknown(variant, {"head_mode", "end_mode"}, "variant");
    auto head = parse_head_mode(as_string(require(variant, "head_mode"), "variant.head_mode"));
    if (!head) fail("variant.head_mode", "expected returning, non_returning or rotating_jump");
    auto end = parse_end_mode(as_string(require(variant, "end_mode"), "variant.end_mode"));
    if (!end) fail("variant.end_mode", "expected halting or repetitive");
    aut.head_mode = *head;
    aut.end_mode = *end;

    {
        const json& list = as_array(require(doc, "alphabet"), "alphabet");
        std::vector<Letter> letters;
        for (std::size_t i = 0; i < list.size(); ++i) {
            letters.push_back(as_letter(list[i], "alphabet[" + std::to_string(i) + "]"));
        }
        try {
            aut.alphabet = Alphabet(letters);
        } catch (const Error& e) {
            fail("alphabet", e.what());
        }
    }
    {
        const json& list = as_array(require(doc, "states"), "states");
        for (std::size_t i = 0; i < list.size(); ++i) {
            aut.states.push_back(as_string(list[i], "states[" + std::to_string(i) + "]"));
        }
    }
    aut.initial = as_states(require(doc, "initial"), "initial");

    const bool repetitive = aut.end_mode == EndMode::Repetitive;
    if (auto it = doc.find("finals"); it != doc.end()) {
        if (repetitive) fail("finals", "repetitive automata accept through end_transitions only");
        aut.finals = as_states(*it, "finals");
    }
    if (auto it = doc.find("translucency"); it != doc.end()) {
        if (aut.head_mode == HeadMode::RotatingJump) fail("translucency", "not allowed for rotating_jump automata");
        if (!it->is_object()) fail("translucency", "expected an object");
        for (const auto& [q, letters] : it->items()) {
            LetterSet set = as_letters(letters, "translucency." + q);
            if (!set.empty()) aut.translucency[q] = std::move(set);
        }
    }
    {
        const json& list = as_array(require(doc, "transitions"), "transitions");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string field = "transitions[" + std::to_string(i) + "]";
            if (!list[i].is_object()) fail(field, "expected an object");
            reject_unknown(list[i], {"from", "on", "to"}, field);
            State from = as_string(require(list[i], "from"), field + ".from");
            Letter on = as_letter(require(list[i], "on"), field + ".on");
            StateSet to = as_states(require(list[i], "to"), field + ".to");
            auto& slot = aut.letter_transitions[{from, on}];
            slot.insert(to.begin(), to.end());
        }
    }
    if (auto it = doc.find("end_transitions"); it != doc.end()) {
        if (!repetitive) fail("end_transitions", "only repetitive automata have end transitions");
        const json& list = as_array(*it, "end_transitions");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string field = "end_transitions[" + std::to_string(i) + "]";
            if (!list[i].is_object()) fail(field, "expected an object");
            reject_unknown(list[i], {"from", "to"}, field);
            State from = as_string(require(list[i], "from"), field + ".from");
            const json& to = require(list[i], "to");
            EndAction action = EndAction::to({});
            if (to.is_string()) {
                if (to.get<std::string>() != "accept") fail(field + ".to", "expected \"accept\" or a list of states");
                action = EndAction::accept();
            } else {
                action = EndAction::to(as_states(to, field + ".to"));
            }
            if (!aut.end_transitions.emplace(from, action).second) {
                fail(field + ".from", "duplicate end transition for '" + from + "'");
            }
        }
    }
    std::erase_if(aut.letter_transitions, [](const auto& e) { return e.second.empty(); });

    ValidationReport report = validate(aut);
    if (!report.empty()) {
        std::string message = "invalid automaton:";
        for (const Violation& v : report) message += "\n  " + v.message;
        throw DocumentError(message);
    }
    return aut;
}

std::string serialize_document(const TlAutomaton& aut) {
    const StateOrder order(aut);
    std::vector<std::string> fields;
    auto field = [&fields](const std::string& key, const std::string& value) {
        fields.push_back("  " + json(key).dump() + ": " + value);
    };
    auto block = [](const std::vector<std::string>& lines, char open, char close) {
        if (lines.empty()) return std::string{open, close};
        std::string out(1, open);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            out += "\n    " + lines[i] + (i + 1 < lines.size() ? "," : "");
        }
        return out + "\n  " + close;
    };

    field("format_version", std::to_string(kFormatVersion));
    if (!aut.name.empty()) field("name", json(aut.name).dump());
    field("variant", json::object({{"head_mode", std::string(to_string(aut.head_mode))},
                                   {"end_mode", std::string(to_string(aut.end_mode))}})
                         .dump());
    field("alphabet", letter_list(aut.alphabet.as_set(), aut.alphabet).dump());
    field("states", json(aut.states).dump());
    field("initial", order.list(aut.initial).dump());
    if (aut.end_mode == EndMode::Halting) field("finals", order.list(aut.finals).dump());
    if (aut.head_mode != HeadMode::RotatingJump) {
        std::vector<std::string> lines;
        for (const State& q : aut.states) {
            if (aut.translucent(q).empty()) continue;
            lines.push_back(json(q).dump() + ": " + letter_list(aut.translucent(q), aut.alphabet).dump());
        }
        field("translucency", block(lines, '{', '}'));
    }
    {
        std::vector<std::string> lines;
        for (const State& q : aut.states) {
            for (Letter a : aut.alphabet.letters()) {
                if (aut.targets(q, a).empty()) continue;
                json entry = json::object();
                entry["from"] = q;
                entry["on"] = std::string(1, a);
                entry["to"] = order.list(aut.targets(q, a));
                lines.push_back(entry.dump());
            }
        }
        field("transitions", block(lines, '[', ']'));
    }
    if (aut.end_mode == EndMode::Repetitive) {
        std::vector<std::string> lines;
        for (const State& q : aut.states) {
            const EndAction& action = aut.end_action(q);
            if (!action.is_accept() && action.targets().empty()) continue;
            json entry = json::object();
            entry["from"] = q;
            entry["to"] = action.is_accept() ? json("accept") : order.list(action.targets());
            lines.push_back(entry.dump());
        }
        field("end_transitions", block(lines, '[', ']'));
    }

    std::string out = "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i) out += fields[i] + (i + 1 < fields.size() ? ",\n" : "\n");
    return out + "}\n";
}

TlAutomaton load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_document(text.str());
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

void save_document(const TlAutomaton& aut, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write '" + path + "'");
    out << serialize_document(aut);
    if (!out) throw FileError("failed writing '" + path + "'");
}

}  // namespace tla
