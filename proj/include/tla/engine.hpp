#pragma once

// Single-step computation relations and complete runs for every variant.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tla/automaton.hpp"
#include "tla/compiled.hpp"

namespace tla {

/// Tape snapshot x q w <|: the consumed prefix x is non-empty only for
/// non-returning automata, the head sits on the first letter of `remaining`.
struct Configuration {
    Word consumed_prefix;
    State state;
    Word remaining;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

enum class Verdict { Accept, Reject, StepLimit };

std::string_view to_string(Verdict verdict);

struct StepKind {
    enum class Kind { ReadLetter, EndMarkerMove, Terminal };

    Kind kind = Kind::Terminal;
    Letter letter = '\0';
    /// Index of the deleted letter on the current tape (prefix + remaining).
    std::size_t position = 0;
    /// Index of the deleted letter in the original input word.
    std::size_t input_index = 0;

    static StepKind read(Letter a, std::size_t position, std::size_t input_index) {
        return {Kind::ReadLetter, a, position, input_index};
    }
    static StepKind marker() { return {Kind::EndMarkerMove}; }
    static StepKind terminal() { return {Kind::Terminal}; }

    friend bool operator==(const StepKind&, const StepKind&) = default;
};

struct TraceStep {
    Configuration configuration;
    /// How the run leaves this configuration.
    StepKind kind;
};

struct Trace {
    std::vector<TraceStep> steps;
    Verdict verdict = Verdict::Reject;

    /// Number of applications of the single-step relation.
    std::size_t step_count() const { return steps.size(); }
};

/// One outcome of a single step: either a successor configuration or a
/// terminal verdict.
struct Successor {
    std::optional<Configuration> configuration;
    Verdict verdict = Verdict::Reject;
    StepKind kind;
};

/// All one-step successors of `cfg`. `input_index` annotations equal
/// `position`, since a bare configuration carries no input history.
std::vector<Successor> step(const TlAutomaton& aut, const Configuration& cfg);

/// |w|(|Sigma|+1) + (|Q|+1)(|w|+1): no run that avoids a marker loop is longer.
std::size_t default_step_limit(const CompiledAutomaton& aut, std::size_t word_length);

inline constexpr std::size_t kDefaultMaxConfigs = 4'000'000;

class StepLimitError : public Error {
public:
    using Error::Error;
};

struct SearchResult {
    Verdict verdict = Verdict::Reject;
    /// Shortest accepting computation when verdict is Accept.
    std::optional<Trace> witness;
    std::size_t configurations_explored = 0;
};

/// Runs words against a compiled automaton. Cheap to reuse across words.
class Engine {
public:
    explicit Engine(const TlAutomaton& aut) : aut_(aut) {}
    explicit Engine(CompiledAutomaton aut) : aut_(std::move(aut)) {}

    const CompiledAutomaton& automaton() const noexcept { return aut_; }

    /// Throws VariantError for nondeterministic automata.
    Trace run_deterministic(std::string_view word, std::optional<std::size_t> step_limit = {}) const;

    /// Breadth-first search of the configuration graph with a visited set.
    SearchResult run_nondeterministic(std::string_view word,
                                      std::size_t max_configs = kDefaultMaxConfigs) const;

    /// Deterministic automata run directly; a marker loop there falls back to
    /// the search, which settles it. Throws StepLimitError if the search
    /// bound is exhausted.
    bool accepts(std::string_view word) const;

private:
    CompiledAutomaton aut_;
};

Trace run_deterministic(const TlAutomaton& aut, std::string_view word,
                        std::optional<std::size_t> step_limit = {});
SearchResult run_nondeterministic(const TlAutomaton& aut, std::string_view word,
                                  std::size_t max_configs = kDefaultMaxConfigs);
bool accepts(const TlAutomaton& aut, std::string_view word);

/// `q0 aabbcba<|` for returning/jumping automata, `ab q3 ba<|` when a
/// non-returning head has moved past a prefix.
std::string render_configuration(const Configuration& cfg);

/// One line per configuration; every line after the first starts with
/// `|- `, and the last line is `|- Accept`, `|- Reject` or `|- StepLimit`.
std::string render_trace(const Trace& trace);

}  // namespace tla
