#pragma once

// Unified data model for finite automata with translucent letters.
//
// A single TlAutomaton value covers every member of the family: the head
// mode selects how the tape is scanned after a letter has been deleted, the
// end mode selects what happens when only translucent letters remain, and
// determinism is a property of the transition tables.
//
//   head mode      end mode     deterministic   nondeterministic
//   Returning      Halting      DFAwtl          NFAwtl
//   Returning      Repetitive   RDFAwtl         RNFAwtl
//   NonReturning   Halting      nr-nr-DFAwtl    nr-nr-NFAwtl
//   NonReturning   Repetitive   nr-DFAwtl       nr-NFAwtl
//   RotatingJump   Halting      ROWJFA          NROWJFA

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tla {

using Letter = char;
using Word = std::string;
using State = std::string;
using StateSet = std::set<State>;
using LetterSet = std::set<Letter>;

/// Printable form of the end-of-tape marker.
inline constexpr std::string_view kEndMarker = "<|";

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation receives an automaton of the wrong variant.
class VariantError : public Error {
public:
    using Error::Error;
};

/// Ordered set of input letters. Declaration order is the canonical letter
/// order used for enumeration and tie-breaking.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);
    Alphabet(std::initializer_list<Letter> letters)
        : Alphabet(std::vector<Letter>(letters)) {}
    explicit Alphabet(std::string_view letters)
        : Alphabet(std::vector<Letter>(letters.begin(), letters.end())) {}

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    bool contains(Letter a) const noexcept;
    /// Position of `a` in declaration order, or -1.
    int index_of(Letter a) const noexcept;
    LetterSet as_set() const { return {letters_.begin(), letters_.end()}; }
    bool same_letters(const Alphabet& other) const { return as_set() == other.as_set(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Letter> letters_;
};

/// Letters usable in an alphabet: visible ASCII, excluding the characters
/// the text formats reserve.
bool is_valid_letter(Letter a) noexcept;

enum class HeadMode { Returning, NonReturning, RotatingJump };
enum class EndMode { Halting, Repetitive };

std::string_view to_string(HeadMode mode);
std::string_view to_string(EndMode mode);
std::optional<HeadMode> parse_head_mode(std::string_view text);
std::optional<EndMode> parse_end_mode(std::string_view text);

/// Behaviour at the end-of-tape marker for a repetitive automaton: either
/// the verdict Accept or a (possibly empty) set of successor states.
class EndAction {
public:
    static EndAction accept() { return EndAction{}; }
    static EndAction to(StateSet targets) { return EndAction{std::move(targets)}; }

    bool is_accept() const noexcept { return !targets_.has_value(); }
    /// Successor states; empty when the action is Accept.
    const StateSet& targets() const;

    friend bool operator==(const EndAction&, const EndAction&) = default;

private:
    EndAction() = default;
    explicit EndAction(StateSet targets) : targets_(std::move(targets)) {}

    std::optional<StateSet> targets_;
};

struct TlAutomaton {
    std::string name;
    HeadMode head_mode = HeadMode::Returning;
    EndMode end_mode = EndMode::Halting;
    Alphabet alphabet;
    /// Declaration order is significant: it fixes the successor order of the
    /// engine and the layout of serialized documents.
    std::vector<State> states;
    /// Missing entries mean an empty set of translucent letters.
    std::map<State, LetterSet> translucency;
    StateSet initial;
    /// Only for Halting automata (including the jumping variants).
    StateSet finals;
    /// Missing entries mean no transition.
    std::map<std::pair<State, Letter>, StateSet> letter_transitions;
    /// Only for Repetitive automata; missing entries mean the empty set.
    std::map<State, EndAction> end_transitions;

    bool has_state(const State& q) const;
    const LetterSet& translucent(const State& q) const;
    const StateSet& targets(const State& q, Letter a) const;
    /// Marker action of `q`; the empty target set when none is recorded.
    const EndAction& end_action(const State& q) const;
    /// Letters `q` can read (the set of letters with a defined transition).
    LetterSet readable(const State& q) const;

    friend bool operator==(const TlAutomaton&, const TlAutomaton&) = default;
};

struct Violation {
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};
using ValidationReport = std::vector<Violation>;

/// Lists every violated structural invariant; an empty report means valid.
ValidationReport validate(const TlAutomaton& aut);
/// Throws Error carrying the first violations if `aut` is invalid.
void require_valid(const TlAutomaton& aut);

struct VariantDescriptor {
    bool deterministic = false;
    HeadMode head_mode = HeadMode::Returning;
    EndMode end_mode = EndMode::Halting;
    std::string canonical_name;

    friend bool operator==(const VariantDescriptor&, const VariantDescriptor&) = default;
};

std::string canonical_name(bool deterministic, HeadMode head, EndMode end);
bool is_deterministic(const TlAutomaton& aut);
/// Throws Error on invalid automata.
VariantDescriptor classify(const TlAutomaton& aut);

/// Renames states to q0, q1, ... in breadth-first order from the initial
/// states, following letters in alphabet order and then the marker.
/// Unreachable states keep their relative order after the reachable ones.
TlAutomaton canonicalize(const TlAutomaton& aut);

/// Applies a state renaming; `rename` must be injective on aut.states.
TlAutomaton rename_states(const TlAutomaton& aut, const std::map<State, State>& rename);

/// Returns `base` or a primed variant of it that does not occur in `taken`.
State fresh_state(const State& base, const std::set<State>& taken);

}  // namespace tla
