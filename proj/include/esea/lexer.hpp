#pragma once

#include "esea/diagnostics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace esea {

enum class TokenKind {
    keyword,    // "Name:", "IF", "Direct", enum literals, ...
    identifier,
    string_lit,
    int_lit,
    double_lit,
    bool_lit,
    punct, // ( ) [ ] , + - * / ^ = == <> < <= > >= :
    eof,
};

struct Token {
    TokenKind kind = TokenKind::eof;
    std::string lexeme;  // exact source slice
    std::string text;    // decoded value for string literals
    double number = 0;   // value for int/double literals
    bool bool_value = false;
    Span span;

    bool is_kw(std::string_view kw) const { return kind == TokenKind::keyword && lexeme == kw; }
    bool is_punct(std::string_view p) const { return kind == TokenKind::punct && lexeme == p; }
};

struct LexResult {
    std::vector<Token> tokens; // always ends with an eof token
    std::vector<Diagnostic> diagnostics;
};

// Keywords (including the "Foo:" forms) are reserved; an identifier can
// never spell one. Longest match applies throughout: "<=" before "<",
// "==" before "=", DOUBLE before INT, and word boundaries keep "truest"
// a single identifier. On an unterminated string or an illegal character
// a diagnostic is emitted and lexing resumes at the next line.
LexResult tokenize(std::string_view source, std::string file = "<input>");

bool is_reserved_word(std::string_view word);

const char* token_kind_name(TokenKind kind);

} // namespace esea
