#include "tla/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <regex>
#include <set>
#include <tuple>

#include "tla/engine.hpp"

namespace tla {

namespace {

std::size_t count(std::string_view w, Letter a) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

LanguageSpec make(std::string name, std::string_view letters, std::function<bool(std::string_view)> p) {
    return {std::move(name), Alphabet(letters), std::move(p)};
}

Alphabet merged(const Alphabet& first, const Alphabet& second) {
    std::vector<Letter> letters = first.letters();
    for (Letter a : second.letters()) {
        if (!first.contains(a)) letters.push_back(a);
    }
    return Alphabet(letters);
}

using Builtin = std::function<LanguageSpec()>;

const std::vector<std::pair<std::string, Builtin>>& builtins() {
    static const std::vector<std::pair<std::string, Builtin>> table = {
        {"L_vee_c",
         [] {
             return make("L_vee_c", "abc", [](std::string_view w) {
                 const auto a = count(w, 'a'), b = count(w, 'b'), c = count(w, 'c');
                 return (c == 1 && a == b) || (c == 0 && 2 * a == b);
             });
         }},
        {"L_vee",
         [] {
             return make("L_vee", "ab", [](std::string_view w) {
                 const auto a = count(w, 'a'), b = count(w, 'b');
                 return b == a || b == 2 * a;
             });
         }},
        {"L_eq", [] { return make("L_eq", "ab", [](std::string_view w) { return count(w, 'a') == count(w, 'b'); }); }},
        {"L_2eq",
         [] { return make("L_2eq", "ab", [](std::string_view w) { return 2 * count(w, 'a') == count(w, 'b'); }); }},
        {"L_2eq_prime",
         [] {
             return make("L_2eq_prime", "cd", [](std::string_view w) { return 2 * count(w, 'c') == count(w, 'd'); });
         }},
        {"L_2",
         [] {
             return make("L_2", "ab", [](std::string_view w) {
                 const std::size_t n = w.size() / 2;
                 return w.size() % 2 == 0 && w.substr(0, n) == std::string(n, 'a') &&
                        w.substr(n) == std::string(n, 'b');
             });
         }},
        {"L_c",
         [] {
             return make("L_c", "abc", [](std::string_view w) {
                 if (w.empty() || w.back() != 'c') return false;
                 auto body = w.substr(0, w.size() - 1);
                 return count(body, 'c') == 0 && count(body, 'a') >= count(body, 'b');
             });
         }},
        {"L_c_rev",
         [] {
             return make("L_c_rev", "abc", [](std::string_view w) {
                 if (w.empty() || w.front() != 'c') return false;
                 auto body = w.substr(1);
                 return count(body, 'c') == 0 && count(body, 'a') >= count(body, 'b');
             });
         }},
        {"L_geq",
         [] { return make("L_geq", "ab", [](std::string_view w) { return count(w, 'a') >= count(w, 'b'); }); }},
        {"L_sandwich",
         [] {
             return make("L_sandwich", "ab", [](std::string_view w) {
                 const auto a = count(w, 'a'), b = count(w, 'b');
                 return a <= b && b <= 2 * a;
             });
         }},
        {"L_single_c", [] { return make("L_single_c", "c", [](std::string_view w) { return w == "c"; }); }},
        {"R_ab_abb",
         [] {
             auto re = std::make_shared<const std::regex>("(ab)*|(abb)*");
             return make("R_ab_abb", "ab",
                         [re](std::string_view w) { return std::regex_match(w.begin(), w.end(), *re); });
         }},
    };
    return table;
}

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    LanguageSpec parse() {
        LanguageSpec lang = expression();
        skip_spaces();
        if (at_ < text_.size()) fail("unexpected '" + std::string(1, text_[at_]) + "'");
        return lang;
    }

private:
    LanguageSpec expression() {
        skip_spaces();
        const std::size_t start = at_;
        while (at_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[at_])) || text_[at_] == '_')) {
            ++at_;
        }
        const std::string name(text_.substr(start, at_ - start));
        if (name.empty()) fail("expected a language name");
        skip_spaces();
        if (at_ == text_.size() || text_[at_] != '(') {
            for (const auto& [known, build] : builtins()) {
                if (known == name) return build();
            }
            fail("unknown language '" + name + "'");
        }
        ++at_;
        std::vector<LanguageSpec> args{expression()};
        skip_spaces();
        while (at_ < text_.size() && text_[at_] == ',') {
            ++at_;
            args.push_back(expression());
            skip_spaces();
        }
        if (at_ == text_.size() || text_[at_] != ')') fail("expected ')'");
        ++at_;
        auto arity = [&](std::size_t n) {
            if (args.size() != n) fail(name + " takes " + std::to_string(n) + " argument(s)");
        };
        if (name == "com") return arity(1), commutative_closure(args[0]);
        if (name == "reverse") return arity(1), reverse(args[0]);
        if (name == "star") return arity(1), star(args[0]);
        if (name == "complement") return arity(1), complement(args[0]);
        if (name == "shuffle") return arity(2), shuffle(args[0], args[1]);
        if (name == "product") return arity(2), product(args[0], args[1]);
        fail("unknown combinator '" + name + "'");
    }

    void skip_spaces() {
        while (at_ < text_.size() && text_[at_] == ' ') ++at_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw Error("language expression '" + std::string(text_) + "': " + message);
    }

    std::string_view text_;
    std::size_t at_ = 0;
};

}  // namespace

bool LanguageSpec::contains(std::string_view word) const {
    for (Letter a : word) {
        if (!alphabet.contains(a)) return false;
    }
    return predicate(word);
}

LanguageSpec builtin_language(std::string_view expression) { return ExpressionParser(expression).parse(); }

std::vector<std::string> builtin_language_names() {
    std::vector<std::string> names;
    for (const auto& [name, build] : builtins()) names.push_back(name);
    return names;
}

LanguageSpec language_of(const TlAutomaton& aut) {
    auto engine = std::make_shared<const Engine>(aut);
    return {aut.name.empty() ? "automaton" : aut.name, aut.alphabet,
            [engine](std::string_view w) { return engine->accepts(w); }};
}

LanguageSpec commutative_closure(const LanguageSpec& lang) {
    return {"com(" + lang.name + ")", lang.alphabet, [lang](std::string_view w) {
                std::string perm(w);
                std::sort(perm.begin(), perm.end());
                do {
                    if (lang.contains(perm)) return true;
                } while (std::next_permutation(perm.begin(), perm.end()));
                return false;
            }};
}

LanguageSpec shuffle(const LanguageSpec& first, const LanguageSpec& second) {
    return {"shuffle(" + first.name + "," + second.name + ")", merged(first.alphabet, second.alphabet),
            [first, second](std::string_view w) {
                if (w.size() > 24) throw Error("shuffle predicate limited to words of length 24");
                const std::uint32_t subsets = std::uint32_t{1} << w.size();
                std::string u, v;
                for (std::uint32_t mask = 0; mask < subsets; ++mask) {
                    u.clear();
                    v.clear();
                    for (std::size_t i = 0; i < w.size(); ++i) ((mask >> i) & 1U ? u : v).push_back(w[i]);
                    if (first.contains(u) && second.contains(v)) return true;
                }
                return false;
            }};
}

LanguageSpec reverse(const LanguageSpec& lang) {
    return {"reverse(" + lang.name + ")", lang.alphabet, [lang](std::string_view w) {
                return lang.contains(std::string(w.rbegin(), w.rend()));
            }};
}

LanguageSpec product(const LanguageSpec& first, const LanguageSpec& second) {
    return {"product(" + first.name + "," + second.name + ")", merged(first.alphabet, second.alphabet),
            [first, second](std::string_view w) {
                for (std::size_t i = 0; i <= w.size(); ++i) {
                    if (first.contains(w.substr(0, i)) && second.contains(w.substr(i))) return true;
                }
                return false;
            }};
}

LanguageSpec star(const LanguageSpec& lang) {
    return {"star(" + lang.name + ")", lang.alphabet, [lang](std::string_view w) {
                // split[j]: the prefix of length j is a product of members.
                std::vector<bool> split(w.size() + 1, false);
                split[0] = true;
                for (std::size_t j = 1; j <= w.size(); ++j) {
                    for (std::size_t i = 0; i < j && !split[j]; ++i) {
                        split[j] = split[i] && lang.contains(w.substr(i, j - i));
                    }
                }
                return bool(split[w.size()]);
            }};
}

LanguageSpec complement(const LanguageSpec& lang) {
    return {"complement(" + lang.name + ")", lang.alphabet,
            [lang](std::string_view w) { return !lang.contains(w); }};
}

LanguageSpec quotient(const LanguageSpec& lang, std::string_view word) {
    const std::string prefix(word);
    return {prefix + "\\" + lang.name, lang.alphabet,
            [lang, prefix](std::string_view w) { return lang.contains(prefix + std::string(w)); }};
}

LanguageSpec with_alphabet(const LanguageSpec& lang, Alphabet alphabet) {
    return {lang.name, std::move(alphabet), [lang](std::string_view w) { return lang.contains(w); }};
}

std::size_t word_count(const Alphabet& alphabet, std::size_t max_len) {
    std::size_t total = 0, layer = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        total += layer;
        if (total > kMaxEnumeratedWords) {
            throw Error("enumeration of " + std::to_string(alphabet.size()) + " letters up to length " +
                        std::to_string(max_len) + " exceeds " + std::to_string(kMaxEnumeratedWords) + " words");
        }
        layer *= std::max<std::size_t>(alphabet.size(), 1);
        if (alphabet.empty()) break;
    }
    return total;
}

void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit) {
    word_count(alphabet, max_len);
    const auto& letters = alphabet.letters();
    if (!visit(Word{})) return;
    if (letters.empty()) return;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        Word w(len, letters[0]);
        while (true) {
            if (!visit(w)) return;
            std::size_t i = len;
            while (i > 0 && digits[i - 1] + 1 == letters.size()) {
                digits[i - 1] = 0;
                w[i - 1] = letters[0];
                --i;
            }
            if (i == 0) break;
            w[i - 1] = letters[++digits[i - 1]];
        }
    }
}

std::vector<Word> enumerate(const LanguageSpec& lang, std::size_t max_len) {
    std::vector<Word> out;
    for_each_word(lang.alphabet, max_len, [&](const Word& w) {
        if (lang.contains(w)) out.push_back(w);
        return true;
    });
    return out;
}

std::vector<Word> enumerate(const TlAutomaton& aut, std::size_t max_len) {
    return enumerate(language_of(aut), max_len);
}

EquivalenceReport equivalent_up_to(const LanguageSpec& first, const LanguageSpec& second,
                                   std::size_t max_len) {
    std::vector<Letter> letters = first.alphabet.letters();
    for (Letter a : second.alphabet.letters()) {
        if (!first.alphabet.contains(a)) letters.push_back(a);
    }
    EquivalenceReport report;
    report.requested = max_len;
    report.equivalent_up_to = max_len;
    for_each_word(Alphabet(letters), max_len, [&](const Word& w) {
        const bool in_first = first.contains(w);
        if (in_first == second.contains(w)) return true;
        report.counterexample = w;
        report.side = in_first ? EquivalenceReport::Side::First : EquivalenceReport::Side::Second;
        return false;
    });
    if (report.counterexample) {
        const std::size_t len = report.counterexample->size();
        // A mismatch at length 0 leaves no length at which the two agree.
        report.equivalent_up_to = len == 0 ? 0 : len - 1;
    }
    return report;
}

EquivalenceReport equivalent_up_to(const TlAutomaton& first, const TlAutomaton& second, std::size_t max_len) {
    return equivalent_up_to(language_of(first), language_of(second), max_len);
}

EquivalenceReport equivalent_up_to(const TlAutomaton& first, const LanguageSpec& second, std::size_t max_len) {
    return equivalent_up_to(language_of(first), second, max_len);
}

namespace {

// Depth-first exploration over (tape, head, state) straight from the maps of
// the automaton. Kept deliberately separate from the engine.
class BruteForce {
public:
    explicit BruteForce(const TlAutomaton& aut) : aut_(aut) {}

    bool accepts(const Word& word) {
        for (const State& q : aut_.initial) {
            if (explore(word, 0, q)) return true;
        }
        return false;
    }

private:
    bool explore(const Word& tape, std::size_t head, const State& q) {
        if (!seen_.insert({tape, head, q}).second) return false;

        if (aut_.head_mode == HeadMode::RotatingJump) {
            for (std::size_t i = 0; i < tape.size(); ++i) {
                const StateSet& next = aut_.targets(q, tape[i]);
                if (next.empty()) continue;
                Word rotated = tape.substr(i + 1) + tape.substr(0, i);
                for (const State& p : next) {
                    if (explore(rotated, 0, p)) return true;
                }
                return false;
            }
            return tape.empty() && aut_.finals.count(q) > 0;
        }

        const LetterSet& hidden = aut_.translucent(q);
        for (std::size_t i = head; i < tape.size(); ++i) {
            if (hidden.count(tape[i])) continue;
            Word rest = tape;
            rest.erase(i, 1);
            const std::size_t next_head = aut_.head_mode == HeadMode::NonReturning ? i : 0;
            for (const State& p : aut_.targets(q, tape[i])) {
                if (explore(rest, next_head, p)) return true;
            }
            return false;
        }
        if (aut_.end_mode == EndMode::Halting) return aut_.finals.count(q) > 0;
        const EndAction& action = aut_.end_action(q);
        if (action.is_accept()) return true;
        for (const State& p : action.targets()) {
            if (explore(tape, 0, p)) return true;
        }
        return false;
    }

    const TlAutomaton& aut_;
    std::set<std::tuple<Word, std::size_t, State>> seen_;
};

}  // namespace

bool brute_accepts(const TlAutomaton& aut, std::string_view word) {
    require_valid(aut);
    if (word.size() > kBruteForceMaxLength) {
        throw Error("brute_accepts handles words up to length " + std::to_string(kBruteForceMaxLength));
    }
    for (Letter a : word) {
        if (!aut.alphabet.contains(a)) throw Error(std::string("letter '") + a + "' is not in the alphabet");
    }
    return BruteForce(aut).accepts(Word(word));
}

std::string render_word(std::string_view word) { return word.empty() ? "ε" : std::string(word); }

}  // namespace tla
