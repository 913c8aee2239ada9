#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "random_automata.hpp"
#include "tla/constructions.hpp"
#include "tla/document.hpp"
#include "tla/fixtures.hpp"

using namespace tla;

#ifndef TLA_SOURCE_DIR
#define TLA_SOURCE_DIR "."
#endif

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string error_of(std::string_view text) {
    try {
        parse_document(text);
    } catch (const DocumentError& e) {
        return e.what();
    }
    return "";
}

const char* kMinimal = R"({
  "format_version": 1,
  "name": "m",
  "variant": {"head_mode":"returning","end_mode":"halting"},
  "alphabet": ["a"],
  "states": ["q0"],
  "initial": ["q0"],
  "finals": ["q0"],
  "transitions": [
    {"from":"q0","on":"a","to":["q0"]}
  ]
})";

std::string with(std::string text, const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    return text.replace(at, from.size(), to);
}

}  // namespace

TEST(Document, ShippedFixturesMatchTheBuiltInAutomata) {
    for (const auto& f : fixtures::all()) {
        const std::string path = TLA_SOURCE_DIR "/fixtures/" + f.file;
        EXPECT_EQ(read_file(path), serialize_document(f.automaton)) << f.file;
        EXPECT_EQ(load_document(path), f.automaton) << f.file;
    }
}

TEST(Document, ExampleFixtureHasEightStates) {
    const TlAutomaton aut = load_document(TLA_SOURCE_DIR "/fixtures/a_vee_c.tla");
    EXPECT_EQ(aut.states.size(), 8u);
    EXPECT_EQ(classify(aut).canonical_name, "RDFAwtl");
    EXPECT_EQ(aut.translucent("q0"), (LetterSet{'a', 'b'}));
}

TEST(Document, RoundTripOnRandomAutomataAndConstructions) {
    for (const auto& shape : tla::testing::all_shapes()) {
        for (const TlAutomaton& a : tla::testing::random_automata(83, 10, shape)) {
            const std::string text = serialize_document(a);
            EXPECT_EQ(parse_document(text), a);
            EXPECT_EQ(serialize_document(parse_document(text)), text);
        }
    }
    const TlAutomaton plain = repetitive_to_plain(fixtures::a_vee_c());
    EXPECT_EQ(parse_document(serialize_document(plain)), plain);
}

TEST(Document, ParseMinimal) {
    const TlAutomaton aut = parse_document(kMinimal);
    EXPECT_EQ(aut.name, "m");
    EXPECT_EQ(aut.finals, StateSet{"q0"});
    EXPECT_EQ(aut.targets("q0", 'a'), StateSet{"q0"});
}

TEST(Document, Errors) {
    EXPECT_NE(error_of("{\n  \"format_version\": 1,\n  oops\n}").find("line 3"), std::string::npos);
    EXPECT_NE(error_of(with(kMinimal, "\"name\"", "\"colour\": 1, \"name\"")).find("colour"), std::string::npos);
    EXPECT_NE(error_of(with(kMinimal, "\"format_version\": 1", "\"format_version\": 2")).find("format_version"),
              std::string::npos);
    EXPECT_NE(error_of(with(kMinimal, "[\"q0\"]}", "[\"q9\"]}")).find("unknown state"), std::string::npos);
    const std::string both = with(kMinimal, "\"transitions\"", "\"end_transitions\": [], \"transitions\"");
    EXPECT_NE(error_of(both), "");
    const std::string repetitive = with(kMinimal, "\"halting\"", "\"repetitive\"");
    EXPECT_NE(error_of(repetitive).find("finals"), std::string::npos);
    EXPECT_NE(error_of(with(kMinimal, "\"on\":\"a\"", "\"on\":\"ab\"")), "");
}

TEST(Document, FileErrors) {
    EXPECT_THROW(load_document("/nonexistent/x.tla"), FileError);
    EXPECT_THROW(save_document(fixtures::l_eq(), "/nonexistent/dir/x.tla"), FileError);
}
