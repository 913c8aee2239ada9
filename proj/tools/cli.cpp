#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tla/automaton.hpp"
#include "tla/constructions.hpp"
#include "tla/document.hpp"
#include "tla/engine.hpp"
#include "tla/fast_membership.hpp"
#include "tla/oracle.hpp"

namespace tla::cli {

namespace {

/// Problems with the arguments rather than the files.
class UsageError : public Error {
public:
    using Error::Error;
};

std::string cli_word(const std::string& arg) { return arg == "ε" ? std::string{} : arg; }

LanguageSpec load_source(const std::string& source) {
    if (source.rfind("lang:", 0) == 0) {
        try {
            return builtin_language(source.substr(5));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    return language_of(load_document(source));
}

int cmd_validate(const std::string& file, std::ostream& out) {
    try {
        load_document(file);
    } catch (const DocumentError& e) {
        out << e.what() << '\n';
        return kRejected;
    }
    out << "OK\n";
    return kOk;
}

int cmd_classify(const std::string& file, std::ostream& out) {
    out << classify(load_document(file)).canonical_name << '\n';
    return kOk;
}

int cmd_run(const std::string& file, const std::string& word_arg, bool fast, bool trace, std::ostream& out,
            std::ostream& err) {
    const TlAutomaton aut = load_document(file);
    const std::string word = cli_word(word_arg);
    for (Letter a : word) {
        if (!aut.alphabet.contains(a)) throw UsageError(std::string("letter '") + a + "' is not in the alphabet");
    }
    bool accepted = false;
    if (fast) {
        if (trace) throw UsageError("--trace is not available with --fast");
        try {
            accepted = fast_accepts(aut, word);
        } catch (const VariantError& e) {
            throw UsageError(e.what());
        }
    } else if (is_deterministic(aut)) {
        Trace t = run_deterministic(aut, word);
        if (trace) out << render_trace(t);
        if (t.verdict == Verdict::StepLimit) {
            err << "warning: step limit reached (the run cycles at the end marker); reporting reject\n";
        }
        accepted = t.verdict == Verdict::Accept;
    } else {
        SearchResult r = run_nondeterministic(aut, word);
        if (r.verdict == Verdict::StepLimit) {
            err << "warning: configuration limit reached; reporting reject\n";
        }
        accepted = r.verdict == Verdict::Accept;
        if (trace) {
            if (r.witness) {
                out << render_trace(*r.witness);
            } else {
                out << "|- " << to_string(r.verdict) << '\n';
            }
        }
    }
    if (!trace) out << (accepted ? "accept" : "reject") << '\n';
    return accepted ? kOk : kRejected;
}

int cmd_transform(const std::string& construction, const std::string& file, const std::string& output,
                  std::ostream& err) {
    const TlAutomaton aut = load_document(file);
    std::optional<TlAutomaton> second;
    std::string name = construction;
    if (construction.rfind("shuffle:", 0) == 0) {
        second = load_document(construction.substr(8));
        name = "shuffle";
    }
    ConstructionResult result;
    try {
        result = run_construction(name, aut, second ? &*second : nullptr);
    } catch (const FileError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    save_document(result.automaton, output);
    const ConstructionReport& r = result.report;
    err << "construction: " << r.construction << '\n'
        << "input: " << r.input.canonical_name << " (" << aut.states.size() << " states)\n"
        << "output: " << r.output.canonical_name << " (" << result.automaton.states.size() << " states)\n"
        << "state blowup: " << std::fixed << std::setprecision(2) << r.state_blowup << '\n';
    for (const std::string& note : r.notes) err << "note: " << note << '\n';
    return kOk;
}

int cmd_compare(const std::string& first, const std::string& second, std::size_t max_len, std::ostream& out) {
    const LanguageSpec a = load_source(first);
    const LanguageSpec b = load_source(second);
    EquivalenceReport report;
    try {
        report = equivalent_up_to(a, b, max_len);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (report.equivalent()) {
        out << "equivalent up to " << max_len << '\n';
        return kOk;
    }
    const bool in_first = report.side == EquivalenceReport::Side::First;
    out << "counterexample: " << render_word(*report.counterexample) << " (accepted by "
        << (in_first ? first : second) << " only)\n";
    return kInequivalent;
}

int cmd_enumerate(const std::string& source, std::size_t max_len, std::ostream& out) {
    const LanguageSpec lang = load_source(source);
    std::vector<Word> words;
    try {
        words = enumerate(lang, max_len);
    } catch (const StepLimitError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    for (const Word& w : words) out << render_word(w) << '\n';
    return kOk;
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
    std::vector<std::size_t> lengths;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long long value = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            lengths.push_back(static_cast<std::size_t>(value));
        } catch (const std::exception&) {
            throw UsageError("bad length '" + item + "' in --lengths");
        }
    }
    if (lengths.empty()) throw UsageError("--lengths needs at least one value");
    return lengths;
}

int cmd_bench(const std::string& file, const std::string& lengths_text, const std::string& pattern,
              double min_seconds, std::ostream& out) {
    const TlAutomaton aut = load_document(file);
    const std::vector<std::size_t> lengths = parse_lengths(lengths_text);
    for (Letter a : pattern) {
        if (!aut.alphabet.contains(a)) throw UsageError(std::string("pattern letter '") + a + "' is not in the alphabet");
    }
    std::vector<BenchRow> rows;
    try {
        rows = bench_fast_membership(aut, lengths, pattern, min_seconds);
    } catch (const VariantError& e) {
        throw UsageError(e.what());
    }
    out << "length\tseconds\tratio\tverdict\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        char line[128];
        std::snprintf(line, sizeof line, "%zu\t%.3e\t", rows[i].length, rows[i].seconds);
        out << line;
        if (i == 0 || rows[i - 1].seconds <= 0) {
            out << "-";
        } else {
            std::snprintf(line, sizeof line, "%.2f", rows[i].seconds / rows[i - 1].seconds);
            out << line;
        }
        out << '\t' << (rows[i].accepted ? "accept" : "reject") << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite automata with translucent letters: run, transform and compare."};
    app.name("tla");
    app.require_subcommand(1);

    std::string file, word, construction, output, first, second, source, lengths, pattern;
    bool fast = false, trace = false;
    std::size_t max_len = 6;
    double min_seconds = 0.05;

    auto* validate = app.add_subcommand("validate", "Check a document; prints OK or the violations");
    validate->add_option("FILE", file, "automaton document")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Print the variant name");
    classify_cmd->add_option("FILE", file, "automaton document")->required();

    auto* run_cmd = app.add_subcommand("run", "Decide membership of a word");
    run_cmd->add_option("FILE", file, "automaton document")->required();
    run_cmd->add_option("WORD", word, "input word (\"\" for the empty word)")->required();
    run_cmd->add_flag("--fast", fast, "use fast membership (deterministic returning automata)");
    run_cmd->add_flag("--trace", trace, "print the computation");

    auto* transform = app.add_subcommand("transform", "Apply a construction");
    transform->add_option("CONSTRUCTION", construction,
                          "embed | nrnr-to-nfa | to-nonreturning | eliminate-loops | complete-reading | "
                          "normalize | to-plain | complement | first-letter | quotient:WORD | shuffle:FILE2")
        ->required();
    transform->add_option("FILE", file, "automaton document")->required();
    transform->add_option("-o,--output", output, "output document")->required();

    auto* compare = app.add_subcommand("compare", "Compare two languages on all words up to a length");
    compare->add_option("A", first, "document or lang:NAME")->required();
    compare->add_option("B", second, "document or lang:NAME")->required();
    compare->add_option("--max-len", max_len, "longest word compared")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List accepted words in length-lexicographic order");
    enumerate_cmd->add_option("SOURCE", source, "document or lang:NAME")->required();
    enumerate_cmd->add_option("--max-len", max_len, "longest word listed")->required();

    auto* bench = app.add_subcommand("bench", "Time fast membership against input length");
    bench->add_option("FILE", file, "automaton document")->required();
    bench->add_option("--lengths", lengths, "comma-separated input lengths")->required();
    bench->add_option("--pattern", pattern, "input unit repeated to each length (default: the alphabet)");
    bench->add_option("--min-time", min_seconds, "seconds spent per length");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, out);
        if (classify_cmd->parsed()) return cmd_classify(file, out);
        if (run_cmd->parsed()) return cmd_run(file, word, fast, trace, out, err);
        if (transform->parsed()) return cmd_transform(construction, file, output, err);
        if (compare->parsed()) return cmd_compare(first, second, max_len, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(source, max_len, out);
        if (bench->parsed()) return cmd_bench(file, lengths, pattern, min_seconds, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FileError& e) {
        err << "error: " << e.what() << '\n';
        return kFile;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << '\n';
        return kFile;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace tla::cli
