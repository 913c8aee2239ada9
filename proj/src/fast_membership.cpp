#include "tla/fast_membership.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace tla {

PositionQueues::PositionQueues(const CompiledAutomaton& aut, std::string_view word)
    : positions_(word.size()), heads_(aut.alphabet().size() + 1, 0), ends_(aut.alphabet().size(), 0),
      remaining_(word.size()) {
    if (word.size() > std::numeric_limits<std::uint32_t>::max()) throw Error("input too long for fast membership");
    for (Letter c : word) {
        const int a = aut.letter_index(c);
        if (a < 0) throw Error(std::string("letter '") + c + "' is not in the alphabet");
        ++heads_[static_cast<std::size_t>(a) + 1];
    }
    for (std::size_t a = 1; a < heads_.size(); ++a) heads_[a] += heads_[a - 1];
    heads_.pop_back();
    ends_ = heads_;
    for (std::size_t i = 0; i < word.size(); ++i) {
        positions_[ends_[static_cast<std::size_t>(aut.letter_index(word[i]))]++] = static_cast<std::uint32_t>(i);
    }
}

FastMembership::FastMembership(const TlAutomaton& aut) : aut_(aut) {
    if (!aut_.deterministic() || aut_.head_mode() != HeadMode::Returning) {
        throw VariantError("fast membership needs a deterministic returning automaton");
    }
}

bool FastMembership::run(std::string_view word, std::vector<FastRead>* reads) const {
    PositionQueues queues(aut_, word);
    const int letters = static_cast<int>(aut_.alphabet().size());
    StateIndex q = aut_.initial().front();
    // States passed at the marker since the last deleted letter.
    std::vector<bool> at_marker(aut_.state_count(), false);
    std::vector<StateIndex> marked;
    if (reads) reads->clear();

    while (true) {
        int best = -1;
        std::size_t best_position = std::numeric_limits<std::size_t>::max();
        for (int a = 0; a < letters; ++a) {
            if (aut_.translucent(q, a) || queues.empty(a)) continue;
            if (queues.front(a) < best_position) {
                best_position = queues.front(a);
                best = a;
            }
        }
        if (best >= 0) {
            const auto& targets = aut_.targets(q, best);
            if (targets.empty()) return false;
            if (reads) reads->push_back({aut_.name(q), best_position});
            queues.pop(best);
            q = targets.front();
            for (StateIndex p : marked) at_marker[p] = false;
            marked.clear();
            continue;
        }
        if (aut_.end_mode() == EndMode::Halting) return aut_.is_final(q);
        if (aut_.accepts_at_marker(q)) return true;
        if (aut_.marker_targets(q).empty()) return false;
        // Same state at the marker with the same tape: the run cycles.
        if (at_marker[q]) return false;
        at_marker[q] = true;
        marked.push_back(q);
        q = aut_.marker_targets(q).front();
    }
}

bool fast_accepts(const TlAutomaton& aut, std::string_view word) { return FastMembership(aut).accepts(word); }

Word bench_word(const Alphabet& alphabet, std::string_view pattern, std::size_t length) {
    std::string unit(pattern);
    if (unit.empty()) unit.assign(alphabet.letters().begin(), alphabet.letters().end());
    if (unit.empty()) return {};
    Word w;
    w.reserve(length);
    while (w.size() < length) w += unit;
    w.resize(length);
    return w;
}

std::vector<BenchRow> bench_fast_membership(const TlAutomaton& aut, const std::vector<std::size_t>& lengths,
                                            std::string_view pattern, double min_seconds) {
    using Clock = std::chrono::steady_clock;
    const FastMembership fast(aut);
    std::vector<BenchRow> rows;
    for (std::size_t length : lengths) {
        const Word word = bench_word(aut.alphabet, pattern, length);
        BenchRow row;
        row.length = length;
        row.seconds = std::numeric_limits<double>::infinity();
        double spent = 0.0;
        while (spent < min_seconds || row.repetitions < 3) {
            const auto start = Clock::now();
            row.accepted = fast.accepts(word);
            const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
            row.seconds = std::min(row.seconds, elapsed);
            spent += elapsed;
            ++row.repetitions;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tla
