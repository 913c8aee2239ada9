#pragma once

// Membership test for deterministic returning automata in near-linear time.
//
// A returning automaton always deletes the leftmost visible letter, so the
// occurrences of any fixed letter are deleted from left to right. Keeping
// one FIFO queue of input positions per letter, the next letter to delete
// is the queue front with the smallest position among the letters visible
// in the current state: O(|Sigma|) work per deleted letter.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "tla/automaton.hpp"
#include "tla/compiled.hpp"

namespace tla {

/// Input positions of every letter in increasing order, stored in one array
/// laid out letter by letter.
class PositionQueues {
public:
    PositionQueues(const CompiledAutomaton& aut, std::string_view word);

    bool empty(int letter) const { return heads_[letter] == ends_[letter]; }
    std::size_t front(int letter) const { return positions_[heads_[letter]]; }
    void pop(int letter) {
        ++heads_[letter];
        --remaining_;
    }
    std::size_t remaining() const noexcept { return remaining_; }

private:
    std::vector<std::uint32_t> positions_;
    std::vector<std::size_t> heads_;
    std::vector<std::size_t> ends_;
    std::size_t remaining_ = 0;
};

struct FastRead {
    State state;
    std::size_t input_index = 0;
    friend bool operator==(const FastRead&, const FastRead&) = default;
};

class FastMembership {
public:
    /// Throws VariantError unless `aut` is deterministic and returning.
    explicit FastMembership(const TlAutomaton& aut);

    bool accepts(std::string_view word) const { return run(word, nullptr); }
    /// Also records, for every deleted letter, the state reading it and its
    /// input position.
    bool accepts(std::string_view word, std::vector<FastRead>& reads) const { return run(word, &reads); }

    const CompiledAutomaton& automaton() const noexcept { return aut_; }

private:
    bool run(std::string_view word, std::vector<FastRead>* reads) const;

    CompiledAutomaton aut_;
};

bool fast_accepts(const TlAutomaton& aut, std::string_view word);

struct BenchRow {
    std::size_t length = 0;
    /// Best time per call over the repetitions.
    double seconds = 0.0;
    std::size_t repetitions = 0;
    bool accepted = false;
};

/// The input of length n repeats `pattern` (the alphabet in declaration
/// order when empty) and is cut to n letters.
Word bench_word(const Alphabet& alphabet, std::string_view pattern, std::size_t length);

/// Times fast membership per length, repeating each query until
/// `min_seconds` of wall time have been spent on it.
std::vector<BenchRow> bench_fast_membership(const TlAutomaton& aut, const std::vector<std::size_t>& lengths,
                                            std::string_view pattern = "", double min_seconds = 0.05);

}  // namespace tla
