#pragma once

// Index-based view of a validated TlAutomaton, used on the hot paths of the
// execution engine and the fast membership test.

#include <array>
#include <cstdint>
#include <vector>

#include "tla/automaton.hpp"

namespace tla {

using StateIndex = std::uint32_t;

class CompiledAutomaton {
public:
    static constexpr std::size_t kMaxLetters = 64;

    /// Validates `aut`; throws Error if it is invalid or its alphabet is too large.
    explicit CompiledAutomaton(const TlAutomaton& aut);

    HeadMode head_mode() const noexcept { return head_mode_; }
    EndMode end_mode() const noexcept { return end_mode_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return names_.size(); }
    const State& name(StateIndex q) const { return names_[q]; }
    StateIndex index(const State& q) const;
    const std::vector<StateIndex>& initial() const noexcept { return initial_; }
    bool deterministic() const noexcept { return deterministic_; }

    /// Letter index in alphabet order, or -1 for foreign letters.
    int letter_index(Letter a) const noexcept {
        auto c = static_cast<unsigned char>(a);
        return c < letter_index_.size() ? letter_index_[c] : -1;
    }
    /// Bit i is set iff letter i is translucent in q. For rotating-jump
    /// automata this is the set of letters q cannot read.
    std::uint64_t translucent_mask(StateIndex q) const noexcept { return translucent_[q]; }
    bool translucent(StateIndex q, int letter) const noexcept {
        return (translucent_[q] >> letter) & 1U;
    }
    const std::vector<StateIndex>& targets(StateIndex q, int letter) const {
        return delta_[q * alphabet_.size() + static_cast<std::size_t>(letter)];
    }
    bool is_final(StateIndex q) const noexcept { return final_[q]; }
    bool accepts_at_marker(StateIndex q) const noexcept { return end_accept_[q]; }
    const std::vector<StateIndex>& marker_targets(StateIndex q) const { return end_targets_[q]; }

    /// Throws Error naming the first letter of `word` outside the alphabet.
    void check_word(std::string_view word) const;

private:
    HeadMode head_mode_;
    EndMode end_mode_;
    Alphabet alphabet_;
    std::array<int, 128> letter_index_{};
    std::vector<State> names_;
    std::vector<StateIndex> initial_;
    std::vector<std::uint64_t> translucent_;
    std::vector<std::vector<StateIndex>> delta_;
    std::vector<bool> final_;
    std::vector<bool> end_accept_;
    std::vector<std::vector<StateIndex>> end_targets_;
    bool deterministic_ = false;
};

}  // namespace tla
