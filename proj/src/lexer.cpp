#include "esea/lexer.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace esea {

namespace {

// Keywords that lex together with their trailing colon.
const std::unordered_set<std::string_view>& colon_keywords() {
    static const std::unordered_set<std::string_view> kws = {
        "Name:",        "Version:",       "isPublic:",       "Description:",
        "Topics:",      "Indicators:",    "Surveys:",        "Certification_levels:",
        "Validation_rules:", "topic_id:", "Parent_topic:",   "Indicator_id:",
        "PreUnit:",     "PostUnit:",      "Topic:",          "Indicator_type:",
        "DataType:",    "Answer_options:", "Order:",         "Text:",
        "survey_id:",   "SurveyType:",    "WelcomeTxt:",     "ClosingTxt:",
        "MinThreshold:", "Anonymous:",    "Sections:",       "section_id:",
        "Title:",       "Questions:",     "TextFragments:",  "question_id:",
        "isMandatory:", "UIComponent:",   "Instruction:",    "Indicator:",
        "certification_id:", "Level:",    "Colour:",         "Requirements:",
        "rule_id:",     "RuleType:",      "Condition:",      "Message:",
        "Formula:",     "Purpose:",
    };
    return kws;
}

// Bare-word keywords: structure words, operators and enum literals.
const std::unordered_set<std::string_view>& word_keywords() {
    static const std::unordered_set<std::string_view> kws = {
        "Direct", "Indirect", "IF", "THEN", "ELSE", "OR", "AND",
        "text", "integer", "double", "date", "boolean", "singleChoice", "multipleChoice",
        "warning", "error", "multi", "single",
        "field", "line", "textBox", "checkBox", "dropDown", "radioButton",
        "abs", "int", "roundUp", "roundDown", "round", "countIf",
        "min", "max", "sum", "avg", "mode", "median",
    };
    return kws;
}

bool is_word_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

struct Lexer {
    std::string_view src;
    std::string file;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;
    LexResult result;

    char peek(std::size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }

    bool at_end() const { return pos >= src.size(); }

    void advance() {
        if (at_end()) return;
        if (src[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    Span span_from(std::size_t start, int start_line, int start_col) const {
        return Span{start, pos - start, start_line, start_col};
    }

    void emit(TokenKind kind, std::size_t start, int start_line, int start_col) {
        Token t;
        t.kind = kind;
        t.span = span_from(start, start_line, start_col);
        t.lexeme = std::string(src.substr(start, pos - start));
        result.tokens.push_back(std::move(t));
    }

    void diag(const std::string& code, Span span, const std::string& message) {
        result.diagnostics.push_back({Severity::error, code, span, message, file});
    }

    void skip_to_next_line() {
        while (!at_end() && src[pos] != '\n') advance();
        if (!at_end()) advance();
    }

    void run() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') advance();
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                lex_block_comment();
                continue;
            }
            if (is_word_start(c)) {
                lex_word();
                continue;
            }
            if (is_digit(c)) {
                lex_number();
                continue;
            }
            if (c == '"') {
                lex_string();
                continue;
            }
            lex_punct();
        }
        Token eof;
        eof.kind = TokenKind::eof;
        eof.span = Span{pos, 0, line, column};
        result.tokens.push_back(std::move(eof));
    }

    void lex_block_comment() {
        std::size_t start = pos;
        int sl = line, sc = column;
        advance();
        advance();
        while (!at_end()) {
            if (peek() == '*' && peek(1) == '/') {
                advance();
                advance();
                return;
            }
            advance();
        }
        diag("E-LEX-COMMENT", span_from(start, sl, sc), "unterminated block comment");
    }

    void lex_word() {
        std::size_t start = pos;
        int sl = line, sc = column;
        while (!at_end() && is_word_char(peek())) advance();
        std::string_view word = src.substr(start, pos - start);
        if (peek() == ':') {
            std::string with_colon = std::string(word) + ":";
            if (colon_keywords().count(with_colon)) {
                advance(); // the colon
                emit(TokenKind::keyword, start, sl, sc);
                return;
            }
        }
        if (word == "true" || word == "false") {
            emit(TokenKind::bool_lit, start, sl, sc);
            result.tokens.back().bool_value = (word == "true");
            return;
        }
        if (word_keywords().count(word)) {
            emit(TokenKind::keyword, start, sl, sc);
            return;
        }
        emit(TokenKind::identifier, start, sl, sc);
    }

    void lex_number() {
        std::size_t start = pos;
        int sl = line, sc = column;
        while (!at_end() && is_digit(peek())) advance();
        bool is_double = false;
        if (peek() == '.' && is_digit(peek(1))) {
            is_double = true;
            advance();
            while (!at_end() && is_digit(peek())) advance();
        }
        emit(is_double ? TokenKind::double_lit : TokenKind::int_lit, start, sl, sc);
        Token& t = result.tokens.back();
        t.number = std::strtod(t.lexeme.c_str(), nullptr);
    }

    void lex_string() {
        std::size_t start = pos;
        int sl = line, sc = column;
        advance(); // opening quote
        std::string decoded;
        while (true) {
            if (at_end() || peek() == '\n') {
                emit(TokenKind::string_lit, start, sl, sc);
                result.tokens.back().text = decoded;
                diag("E-LEX-STR", result.tokens.back().span, "unterminated string literal");
                skip_to_next_line();
                return;
            }
            char c = peek();
            if (c == '"') {
                advance();
                emit(TokenKind::string_lit, start, sl, sc);
                result.tokens.back().text = std::move(decoded);
                return;
            }
            if (c == '\\') {
                std::size_t esc_start = pos;
                int el = line, ec = column;
                advance();
                if (at_end() || peek() == '\n') continue; // unterminated, handled above
                char e = peek();
                switch (e) {
                case '"': decoded += '"'; break;
                case '\\': decoded += '\\'; break;
                case 'n': decoded += '\n'; break;
                case 't': decoded += '\t'; break;
                default:
                    advance();
                    diag("E-LEX-ESC", span_from(esc_start, el, ec),
                         std::string("unknown escape sequence '\\") + e + "'");
                    decoded += e;
                    continue;
                }
                advance();
                continue;
            }
            decoded += c;
            advance();
        }
    }

    void lex_punct() {
        std::size_t start = pos;
        int sl = line, sc = column;
        char c = peek();
        switch (c) {
        case '(': case ')': case '[': case ']': case ',': case '+': case '-':
        case '*': case '/': case '^': case ':':
            advance();
            emit(TokenKind::punct, start, sl, sc);
            return;
        case '=':
            advance();
            if (peek() == '=') advance();
            emit(TokenKind::punct, start, sl, sc);
            return;
        case '<':
            advance();
            if (peek() == '=' || peek() == '>') advance();
            emit(TokenKind::punct, start, sl, sc);
            return;
        case '>':
            advance();
            if (peek() == '=') advance();
            emit(TokenKind::punct, start, sl, sc);
            return;
        default: {
            advance();
            // Consume UTF-8 continuation bytes so the span covers one code point.
            while (!at_end() && (static_cast<unsigned char>(peek()) & 0xc0) == 0x80) advance();
            diag("E-LEX-CHAR", span_from(start, sl, sc),
                 "illegal character '" + std::string(src.substr(start, pos - start)) + "'");
            skip_to_next_line();
            return;
        }
        }
    }
};

} // namespace

LexResult tokenize(std::string_view source, std::string file) {
    // Drop a UTF-8 BOM if present.
    std::size_t bom = 0;
    if (source.size() >= 3 && source[0] == '\xef' && source[1] == '\xbb' && source[2] == '\xbf') {
        bom = 3;
    }
    Lexer lexer;
    lexer.src = source;
    lexer.file = std::move(file);
    lexer.pos = bom;
    lexer.run();
    return std::move(lexer.result);
}

bool is_reserved_word(std::string_view word) {
    return word_keywords().count(word) > 0 || word == "true" || word == "false";
}

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::keyword: return "keyword";
    case TokenKind::identifier: return "identifier";
    case TokenKind::string_lit: return "string";
    case TokenKind::int_lit: return "integer";
    case TokenKind::double_lit: return "double";
    case TokenKind::bool_lit: return "boolean";
    case TokenKind::punct: return "punctuation";
    case TokenKind::eof: return "end of input";
    }
    return "?";
}

} // namespace esea
