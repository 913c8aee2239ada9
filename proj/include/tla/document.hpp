#pragma once

// Text documents for automata (format_version 1): one JSON object laid out
// one entry per line so that documents diff well. Field names follow the
// tuple components: alphabet, states, initial, finals, translucency,
// transitions and end_transitions.

#include <string>
#include <string_view>

#include "tla/automaton.hpp"

namespace tla {

inline constexpr int kFormatVersion = 1;

/// Syntax, schema and validation failures; the message names the line or
/// the offending field.
class DocumentError : public Error {
public:
    using Error::Error;
};

TlAutomaton parse_document(std::string_view text);
/// Canonical text: entries in state and letter declaration order.
std::string serialize_document(const TlAutomaton& aut);

TlAutomaton load_document(const std::string& path);
void save_document(const TlAutomaton& aut, const std::string& path);

/// Raised by load/save when the file itself cannot be read or written.
class FileError : public Error {
public:
    using Error::Error;
};

}  // namespace tla
