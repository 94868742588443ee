#pragma once

#include "esea/ast.hpp"
#include "esea/raw_model.hpp"

#include <string>

namespace esea {

// Canonical model text: two-space indentation, one field per line,
// deterministic output. Re-parsing the result yields a structurally
// equal model, and printing is idempotent.
std::string pretty_print(const raw::Method& model);

// Canonical formula text with the minimal parentheses the precedence
// ladder requires.
std::string print_statement(const Stmt& stmt);
std::string print_expression(const Expr& expr);

// Double-quoted form with \" \\ \n \t escapes applied.
std::string quote_string(std::string_view text);

} // namespace esea
