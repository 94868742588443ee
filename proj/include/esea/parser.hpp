#pragma once

#include "esea/ast.hpp"
#include "esea/diagnostics.hpp"
#include "esea/raw_model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace esea {

struct ParseResult {
    std::optional<raw::Method> model; // set only when no errors were produced
    std::vector<Diagnostic> diagnostics;
};

struct StatementParseResult {
    StmtPtr statement; // null on error
    std::vector<Diagnostic> diagnostics;
};

struct ExpressionParseResult {
    ExprPtr expression; // null on error
    std::vector<Diagnostic> diagnostics;
};

// Parses a whole method model. On errors the parser recovers to the next
// block or element keyword, so one run reports every syntax error it can.
ParseResult parse_method(std::string_view source, std::string file = "<input>");

// Parses a standalone formula (statement: expression or IF ... THEN ...).
StatementParseResult parse_statement(std::string_view source, std::string file = "<formula>");

// Parses a standalone condition (expression only; IF is not allowed here).
ExpressionParseResult parse_expression(std::string_view source, std::string file = "<expr>");

} // namespace esea
