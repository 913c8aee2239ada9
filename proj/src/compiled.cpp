#include "tla/compiled.hpp"

#include <algorithm>
#include <map>

namespace tla {

CompiledAutomaton::CompiledAutomaton(const TlAutomaton& aut)
    : head_mode_(aut.head_mode), end_mode_(aut.end_mode), alphabet_(aut.alphabet), names_(aut.states) {
    require_valid(aut);
    if (alphabet_.size() > kMaxLetters) {
        throw Error("alphabet larger than " + std::to_string(kMaxLetters) + " letters");
    }
    letter_index_.fill(-1);
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        letter_index_[static_cast<unsigned char>(alphabet_.letters()[i])] = static_cast<int>(i);
    }
    std::map<State, StateIndex> index_of;
    for (StateIndex q = 0; q < names_.size(); ++q) index_of[names_[q]] = q;
    auto indices = [&index_of](const StateSet& set) {
        std::vector<StateIndex> out;
        for (const State& q : set) out.push_back(index_of.at(q));
        std::sort(out.begin(), out.end());
        return out;
    };

    const std::size_t n = names_.size();
    const std::size_t k = alphabet_.size();
    initial_ = indices(aut.initial);
    translucent_.assign(n, 0);
    delta_.assign(n * k, {});
    final_.assign(n, false);
    end_accept_.assign(n, false);
    end_targets_.assign(n, {});
    for (StateIndex q = 0; q < n; ++q) {
        const State& name = names_[q];
        for (std::size_t a = 0; a < k; ++a) {
            const Letter letter = alphabet_.letters()[a];
            delta_[q * k + a] = indices(aut.targets(name, letter));
            const bool hidden = aut.head_mode == HeadMode::RotatingJump
                                    ? delta_[q * k + a].empty()
                                    : aut.translucent(name).count(letter) > 0;
            if (hidden) translucent_[q] |= std::uint64_t{1} << a;
        }
        final_[q] = aut.finals.count(name) > 0;
        const EndAction& action = aut.end_action(name);
        end_accept_[q] = action.is_accept();
        end_targets_[q] = indices(action.targets());
    }
    deterministic_ = is_deterministic(aut);
}

StateIndex CompiledAutomaton::index(const State& q) const {
    auto it = std::find(names_.begin(), names_.end(), q);
    if (it == names_.end()) throw Error("unknown state '" + q + "'");
    return static_cast<StateIndex>(it - names_.begin());
}

void CompiledAutomaton::check_word(std::string_view word) const {
    for (Letter a : word) {
        if (letter_index(a) < 0) {
            throw Error(std::string("letter '") + a + "' is not in the alphabet");
        }
    }
}

}  // namespace tla
