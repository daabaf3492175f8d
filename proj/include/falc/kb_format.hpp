#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "falc/axioms.hpp"
#include "falc/interpretation.hpp"

namespace falc {

struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    int length = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceSpan where,
               std::vector<std::string> expected_tokens = {})
        : std::runtime_error(message + " (line " + std::to_string(where.line) +
                             ", column " + std::to_string(where.column) + ")"),
          span(where),
          expected(std::move(expected_tokens)) {}

    SourceSpan span;
    std::vector<std::string> expected;
};

struct ParseOptions {
    /// Names containing an apostrophe are reserved for generated atoms
    /// (gadget and unfolding helpers) and rejected in user input. Set this
    /// when re-reading files the tool itself wrote.
    bool allow_generated_names = false;
};

/// Parses the line-oriented KB format ("abox:" / "tbox:" sections) and
/// applies shorthand expansion, so the result contains core axioms only.
KnowledgeBase parse_kb(std::string_view text, const ParseOptions& opts = {});

/// Parses a single concept expression ("not A and forall R . B").
ConceptRef parse_concept_text(std::string_view text,
                              const ParseOptions& opts = {});

FiniteInterpretation parse_interpretation(std::string_view text,
                                          const ParseOptions& opts = {});

/// Canonical serializations: parse(serialize(x)) == x, byte-stable output.
std::string serialize_kb(const KnowledgeBase& kb);
std::string serialize_interpretation(const FiniteInterpretation& interp);

}  // namespace falc
