#include "esea/parser.hpp"

#include "esea/lexer.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>

namespace esea {

namespace {

// Thrown when an element body is broken; the enclosing loop recovers at
// the next element or block keyword.
struct ElementError {};

constexpr std::array<std::string_view, 12> kSyncKeywords = {
    "Topics:",  "Indicators:",      "Surveys:",     "Certification_levels:",
    "Validation_rules:", "topic_id:", "Indicator_id:", "survey_id:",
    "section_id:", "question_id:",  "certification_id:", "rule_id:",
};

bool is_sync_token(const Token& t) {
    if (t.kind != TokenKind::keyword) return false;
    for (auto kw : kSyncKeywords) {
        if (t.lexeme == kw) return true;
    }
    return false;
}

struct Parser {
    std::vector<Token> tokens;
    std::string file;
    std::vector<Diagnostic> diags;
    std::size_t pos = 0;
    std::size_t last_error_pos = static_cast<std::size_t>(-1);

    const Token& cur() const { return tokens[pos]; }
    bool at_end() const { return cur().kind == TokenKind::eof; }

    void advance() {
        if (!at_end()) ++pos;
    }

    // One diagnostic per token position; repeats are dropped so error
    // cascades cannot flood the report or stall progress.
    void error(const Span& span, std::string message) {
        if (pos == last_error_pos) return;
        last_error_pos = pos;
        diags.push_back({Severity::error, "E-PARSE", span, std::move(message), file});
    }

    [[noreturn]] void fail(std::string message) {
        error(cur().span, std::move(message));
        throw ElementError{};
    }

    std::string describe_current() const {
        const Token& t = cur();
        if (t.kind == TokenKind::eof) return "end of input";
        return std::string(token_kind_name(t.kind)) + " '" + t.lexeme + "'";
    }

    void recover() {
        while (!at_end() && !is_sync_token(cur())) advance();
    }

    // --- field helpers -----------------------------------------------------

    void expect_kw(std::string_view kw) {
        if (cur().is_kw(kw)) {
            advance();
            return;
        }
        fail("expected '" + std::string(kw) + "', found " + describe_current());
    }

    std::string expect_string(std::string_view field_kw) {
        expect_kw(field_kw);
        if (cur().kind != TokenKind::string_lit) {
            fail("expected string after '" + std::string(field_kw) + "', found " +
                 describe_current());
        }
        std::string value = cur().text;
        advance();
        return value;
    }

    double expect_double(std::string_view field_kw) {
        expect_kw(field_kw);
        if (cur().kind != TokenKind::double_lit) {
            fail("expected decimal (like 2.0) after '" + std::string(field_kw) + "', found " +
                 describe_current());
        }
        double value = cur().number;
        advance();
        return value;
    }

    long long expect_int(std::string_view field_kw) {
        expect_kw(field_kw);
        if (cur().kind != TokenKind::int_lit) {
            fail("expected integer after '" + std::string(field_kw) + "', found " +
                 describe_current());
        }
        if (cur().number > 9007199254740992.0) { // 2^53, exact integer range
            fail("integer after '" + std::string(field_kw) + "' is too large");
        }
        auto value = static_cast<long long>(cur().number);
        advance();
        return value;
    }

    bool expect_bool(std::string_view field_kw) {
        expect_kw(field_kw);
        if (cur().kind != TokenKind::bool_lit) {
            fail("expected true or false after '" + std::string(field_kw) + "', found " +
                 describe_current());
        }
        bool value = cur().bool_value;
        advance();
        return value;
    }

    std::pair<std::string, Span> expect_ident(const char* what) {
        if (cur().kind != TokenKind::identifier) {
            fail(std::string("expected ") + what + ", found " + describe_current());
        }
        std::pair<std::string, Span> result{cur().lexeme, cur().span};
        advance();
        return result;
    }

    raw::Ref expect_ref(std::string_view field_kw, const char* what) {
        expect_kw(field_kw);
        auto [name, span] = expect_ident(what);
        return raw::Ref{std::move(name), span};
    }

    // [indicator_id]
    raw::Ref expect_bracket_ref() {
        Span open = cur().span;
        if (!cur().is_punct("[")) {
            fail("expected '[' opening an indicator reference, found " + describe_current());
        }
        advance();
        auto [name, name_span] = expect_ident("indicator id");
        if (!cur().is_punct("]")) {
            fail("expected ']' closing an indicator reference, found " + describe_current());
        }
        Span close = cur().span;
        advance();
        Span span{open.offset, close.offset + close.length - open.offset, open.line, open.column};
        return raw::Ref{std::move(name), span};
    }

    Span span_between(std::size_t start_tok, std::size_t end_tok_exclusive) const {
        const Span& a = tokens[start_tok].span;
        const Span& b = tokens[end_tok_exclusive > start_tok ? end_tok_exclusive - 1 : start_tok].span;
        return Span{a.offset, b.offset + b.length - a.offset, a.line, a.column};
    }

    // --- expressions ---------------------------------------------------------

    bool at_compare_op() const {
        return cur().is_punct("=") || cur().is_punct("<>") || cur().is_punct("<") ||
               cur().is_punct("<=") || cur().is_punct(">") || cur().is_punct(">=") ||
               cur().is_punct("==");
    }

    CompareOp compare_op_from(const Token& t) const {
        if (t.lexeme == "=") return CompareOp::eq;
        if (t.lexeme == "<>") return CompareOp::neq;
        if (t.lexeme == "<") return CompareOp::lt;
        if (t.lexeme == "<=") return CompareOp::le;
        if (t.lexeme == ">") return CompareOp::gt;
        if (t.lexeme == ">=") return CompareOp::ge;
        return CompareOp::eq2;
    }

    StmtPtr parse_statement_node() {
        std::size_t start = pos;
        if (cur().is_kw("IF")) {
            advance();
            ExprPtr condition = parse_expr();
            expect_kw("THEN");
            StmtPtr then_branch = parse_statement_node();
            StmtPtr else_branch;
            if (cur().is_kw("ELSE")) {
                advance();
                else_branch = parse_statement_node();
            }
            return make_stmt(Stmt::If{std::move(condition), std::move(then_branch),
                                      std::move(else_branch)},
                             span_between(start, pos));
        }
        ExprPtr expr = parse_expr();
        return make_stmt(Stmt::ExprStmt{std::move(expr)}, span_between(start, pos));
    }

    ExprPtr parse_expr() {
        std::size_t start = pos;
        ExprPtr left = parse_simple();
        if (!at_compare_op()) return left;
        CompareOp op = compare_op_from(cur());
        advance();
        ExprPtr right = parse_simple();
        ExprPtr result = make_expr(Expr::Compare{op, std::move(left), std::move(right)},
                                   span_between(start, pos));
        if (at_compare_op()) {
            error(cur().span, "comparisons cannot be chained; parenthesize one side");
            // Swallow the rest of the chain so one mistake yields one report.
            while (at_compare_op()) {
                advance();
                parse_simple();
            }
        }
        return result;
    }

    ExprPtr parse_simple() {
        std::size_t start = pos;
        ExprPtr left = parse_term();
        while (cur().is_punct("+") || cur().is_punct("-") || cur().is_kw("OR")) {
            BinaryOp op = cur().is_punct("+")   ? BinaryOp::add
                          : cur().is_punct("-") ? BinaryOp::sub
                                                : BinaryOp::logical_or;
            advance();
            ExprPtr right = parse_term();
            left = make_expr(Expr::Binary{op, std::move(left), std::move(right)},
                             span_between(start, pos));
        }
        return left;
    }

    ExprPtr parse_term() {
        std::size_t start = pos;
        ExprPtr left = parse_factor();
        while (cur().is_punct("*") || cur().is_punct("/") || cur().is_kw("AND")) {
            BinaryOp op = cur().is_punct("*")   ? BinaryOp::mul
                          : cur().is_punct("/") ? BinaryOp::div
                                                : BinaryOp::logical_and;
            advance();
            ExprPtr right = parse_factor();
            left = make_expr(Expr::Binary{op, std::move(left), std::move(right)},
                             span_between(start, pos));
        }
        return left;
    }

    ExprPtr parse_factor() {
        std::size_t start = pos;
        ExprPtr base = parse_base();
        if (!cur().is_punct("^")) return base;
        advance();
        ExprPtr exponent = parse_base();
        ExprPtr result = make_expr(Expr::Pow{std::move(base), std::move(exponent)},
                                   span_between(start, pos));
        if (cur().is_punct("^")) {
            error(cur().span, "'^' cannot be chained; a factor takes a single exponent");
            while (cur().is_punct("^")) {
                advance();
                parse_base();
            }
        }
        return result;
    }

    ExprPtr parse_base() {
        std::size_t start = pos;
        const Token& t = cur();
        if (t.is_punct("(")) {
            advance();
            ExprPtr inner = parse_expr();
            if (!cur().is_punct(")")) fail("expected ')', found " + describe_current());
            advance();
            return inner;
        }
        if (t.is_punct("[")) {
            raw::Ref ref = expect_bracket_ref();
            return make_expr(Expr::Ref{std::move(ref.name)}, ref.span);
        }
        if (t.kind == TokenKind::keyword) {
            if (auto fn = stat_fn_from(t.lexeme)) {
                advance();
                if (!cur().is_punct("(")) fail("expected '(' after '" + t.lexeme + "'");
                advance();
                raw::Ref ref = expect_bracket_ref();
                if (!cur().is_punct(")")) fail("expected ')', found " + describe_current());
                advance();
                return make_expr(Expr::StatCall{*fn, std::move(ref.name), ref.span},
                                 span_between(start, pos));
            }
            if (auto fn = unary_fn_from(t.lexeme)) {
                advance();
                if (!cur().is_punct("(")) fail("expected '(' after '" + t.lexeme + "'");
                advance();
                ExprPtr arg = parse_expr();
                if (!cur().is_punct(")")) fail("expected ')', found " + describe_current());
                advance();
                return make_expr(Expr::UnaryCall{*fn, std::move(arg)}, span_between(start, pos));
            }
            if (auto fn = binary_fn_from(t.lexeme)) {
                advance();
                if (!cur().is_punct("(")) fail("expected '(' after '" + t.lexeme + "'");
                advance();
                ExprPtr arg = parse_expr();
                if (!cur().is_punct(",")) fail("expected ',', found " + describe_current());
                advance();
                BinaryArg target;
                if (cur().kind == TokenKind::int_lit) {
                    if (cur().number > 9007199254740992.0) {
                        fail("integer argument of '" + t.lexeme + "' is too large");
                    }
                    target.value = static_cast<long long>(cur().number);
                    advance();
                } else if (cur().kind == TokenKind::string_lit) {
                    target.value = cur().text;
                    advance();
                } else {
                    fail("expected integer or string as second argument of '" + t.lexeme + "'");
                }
                if (!cur().is_punct(")")) fail("expected ')', found " + describe_current());
                advance();
                return make_expr(Expr::BinaryCall{*fn, std::move(arg), std::move(target)},
                                 span_between(start, pos));
            }
        }
        if (t.kind == TokenKind::bool_lit) {
            advance();
            return make_expr(Expr::BoolLit{t.bool_value}, t.span);
        }
        if (t.kind == TokenKind::string_lit) {
            advance();
            return make_expr(Expr::TextLit{t.text}, t.span);
        }
        if (t.kind == TokenKind::int_lit) {
            advance();
            return make_expr(Expr::NumberLit{t.number, false}, t.span);
        }
        if (t.kind == TokenKind::double_lit) {
            advance();
            return make_expr(Expr::NumberLit{t.number, true}, t.span);
        }
        fail("expected an expression, found " + describe_current());
    }

    // --- model elements ------------------------------------------------------

    raw::Topic parse_topic() {
        raw::Topic topic;
        expect_kw("topic_id:");
        std::tie(topic.id, topic.id_span) = expect_ident("topic id");
        topic.name = expect_string("Name:");
        topic.description = expect_string("Description:");
        if (cur().is_kw("Parent_topic:")) {
            topic.parent = expect_ref("Parent_topic:", "topic id");
        }
        return topic;
    }

    std::vector<raw::AnswerOption> parse_answer_options() {
        expect_kw("Answer_options:");
        std::vector<raw::AnswerOption> options;
        while (cur().is_kw("Order:")) {
            raw::AnswerOption option;
            option.span = cur().span;
            option.order = expect_int("Order:");
            option.text = expect_string("Text:");
            options.push_back(std::move(option));
        }
        if (options.empty()) {
            fail("expected at least one answer option");
        }
        return options;
    }

    raw::Datatype parse_datatype() {
        expect_kw("DataType:");
        raw::Datatype datatype;
        datatype.span = cur().span;
        const Token& t = cur();
        if (t.is_kw("text")) {
            datatype.kind = DatatypeKind::text;
            advance();
        } else if (t.is_kw("integer")) {
            datatype.kind = DatatypeKind::integer;
            advance();
        } else if (t.is_kw("double")) {
            datatype.kind = DatatypeKind::real;
            advance();
        } else if (t.is_kw("date")) {
            datatype.kind = DatatypeKind::date;
            advance();
        } else if (t.is_kw("boolean")) {
            datatype.kind = DatatypeKind::boolean;
            advance();
        } else if (t.is_kw("singleChoice")) {
            datatype.kind = DatatypeKind::single_choice;
            advance();
            datatype.options = parse_answer_options();
        } else if (t.is_kw("multipleChoice")) {
            datatype.kind = DatatypeKind::multiple_choice;
            advance();
            datatype.options = parse_answer_options();
        } else {
            fail("expected a datatype (text, integer, double, date, boolean, singleChoice, "
                 "multipleChoice), found " +
                 describe_current());
        }
        return datatype;
    }

    raw::Indicator parse_indicator() {
        raw::Indicator ind;
        expect_kw("Indicator_id:");
        std::tie(ind.id, ind.id_span) = expect_ident("indicator id");
        ind.name = expect_string("Name:");
        ind.description = expect_string("Description:");
        if (cur().is_kw("PreUnit:")) ind.pre_unit = expect_string("PreUnit:");
        if (cur().is_kw("PostUnit:")) ind.post_unit = expect_string("PostUnit:");
        ind.topic = expect_ref("Topic:", "topic id");
        expect_kw("Indicator_type:");
        if (cur().is_kw("Direct")) {
            advance();
            raw::DirectKind direct;
            if (cur().is_kw("Condition:")) {
                advance();
                direct.condition = parse_expr();
            }
            ind.kind = std::move(direct);
        } else if (cur().is_kw("Indirect")) {
            advance();
            raw::IndirectKind indirect;
            expect_kw("Formula:");
            indirect.formula = parse_statement_node();
            if (cur().is_kw("Purpose:")) {
                advance();
                // Contextual words, not reserved keywords.
                if (cur().kind == TokenKind::identifier && cur().lexeme == "performance") {
                    indirect.purpose = Purpose::performance;
                } else if (cur().kind == TokenKind::identifier && cur().lexeme == "score") {
                    indirect.purpose = Purpose::score;
                } else {
                    fail("expected 'performance' or 'score' after 'Purpose:', found " +
                         describe_current());
                }
                indirect.purpose_stated = true;
                advance();
            }
            ind.kind = std::move(indirect);
        } else {
            fail("expected 'Direct' or 'Indirect' after 'Indicator_type:', found " +
                 describe_current());
        }
        ind.datatype = parse_datatype();
        return ind;
    }

    raw::Question parse_question() {
        raw::Question q;
        expect_kw("question_id:");
        std::tie(q.id, q.id_span) = expect_ident("question id");
        q.name = expect_string("Name:");
        q.description = expect_string("Description:");
        q.is_mandatory = expect_bool("isMandatory:");
        expect_kw("UIComponent:");
        if (auto ui = ui_component_from(cur().lexeme);
            ui && cur().kind == TokenKind::keyword) {
            q.ui = *ui;
            advance();
        } else {
            fail("expected a UI component (field, line, textBox, checkBox, dropDown, "
                 "radioButton), found " +
                 describe_current());
        }
        q.order = expect_int("Order:");
        expect_kw("Indicator:");
        if (cur().kind == TokenKind::identifier) {
            q.indicator = raw::Ref{cur().lexeme, cur().span};
            advance();
        }
        q.instruction = expect_string("Instruction:");
        return q;
    }

    raw::Section parse_section() {
        raw::Section section;
        expect_kw("section_id:");
        std::tie(section.id, section.id_span) = expect_ident("section id");
        section.title = expect_string("Title:");
        section.order = expect_int("Order:");
        expect_kw("Questions:");
        while (cur().is_kw("question_id:")) {
            try {
                section.questions.push_back(parse_question());
            } catch (const ElementError&) {
                recover();
            }
        }
        if (section.questions.empty()) {
            fail("expected at least one question");
        }
        if (cur().is_kw("TextFragments:")) {
            advance();
            while (cur().is_kw("Text:")) {
                raw::TextFragment fragment;
                fragment.span = cur().span;
                fragment.text = expect_string("Text:");
                fragment.order = expect_int("Order:");
                section.fragments.push_back(std::move(fragment));
            }
        }
        return section;
    }

    raw::Survey parse_survey() {
        raw::Survey survey;
        expect_kw("survey_id:");
        std::tie(survey.id, survey.id_span) = expect_ident("survey id");
        survey.name = expect_string("Name:");
        survey.description = expect_string("Description:");
        expect_kw("SurveyType:");
        if (cur().is_kw("multi")) {
            survey.type = SurveyType::multi;
            advance();
        } else if (cur().is_kw("single")) {
            survey.type = SurveyType::single;
            advance();
        } else {
            fail("expected 'multi' or 'single' after 'SurveyType:', found " + describe_current());
        }
        if (cur().is_kw("WelcomeTxt:")) survey.welcome_txt = expect_string("WelcomeTxt:");
        if (cur().is_kw("ClosingTxt:")) survey.closing_txt = expect_string("ClosingTxt:");
        survey.min_threshold = expect_double("MinThreshold:");
        if (cur().is_kw("Anonymous:")) survey.anonymous = expect_bool("Anonymous:");
        expect_kw("Sections:");
        while (cur().is_kw("section_id:")) {
            try {
                survey.sections.push_back(parse_section());
            } catch (const ElementError&) {
                recover();
            }
        }
        if (survey.sections.empty()) {
            fail("expected at least one section");
        }
        return survey;
    }

    raw::CertificationLevel parse_certification() {
        raw::CertificationLevel level;
        expect_kw("certification_id:");
        std::tie(level.id, level.id_span) = expect_ident("certification id");
        level.name = expect_string("Name:");
        level.description = expect_string("Description:");
        level.level = expect_double("Level:");
        level.colour = expect_string("Colour:");
        expect_kw("Requirements:");
        level.requirements.push_back(expect_bracket_ref());
        while (cur().is_punct(",")) {
            advance();
            level.requirements.push_back(expect_bracket_ref());
        }
        return level;
    }

    raw::ValidationRule parse_rule() {
        raw::ValidationRule rule;
        expect_kw("rule_id:");
        std::tie(rule.id, rule.id_span) = expect_ident("rule id");
        rule.name = expect_string("Name:");
        expect_kw("RuleType:");
        if (cur().is_kw("warning")) {
            rule.rule_type = RuleSeverity::warning;
            advance();
        } else if (cur().is_kw("error")) {
            rule.rule_type = RuleSeverity::error;
            advance();
        } else {
            fail("expected 'warning' or 'error' after 'RuleType:', found " + describe_current());
        }
        expect_kw("Condition:");
        rule.condition = parse_expr();
        rule.message = expect_string("Message:");
        return rule;
    }

    // Consumes the block keyword if present; on a mismatch reports, skips
    // to the nearest sync point and still accepts a headerless element
    // list so diagnosis can continue inside it.
    bool expect_block(std::string_view block_kw, std::string_view element_kw) {
        if (cur().is_kw(block_kw)) {
            advance();
            return true;
        }
        error(cur().span, "expected '" + std::string(block_kw) + "', found " + describe_current());
        recover();
        if (cur().is_kw(block_kw)) {
            advance();
            return true;
        }
        return cur().is_kw(element_kw);
    }

    template <typename ParseFn, typename Vec>
    void parse_elements(std::string_view element_kw, ParseFn fn, Vec& out) {
        while (cur().is_kw(element_kw)) {
            try {
                out.push_back((this->*fn)());
            } catch (const ElementError&) {
                recover();
            }
        }
    }

    raw::Method parse_method_root() {
        raw::Method method;
        try {
            method.name = expect_string("Name:");
            method.version = expect_double("Version:");
            method.is_public = expect_bool("isPublic:");
            method.description = expect_string("Description:");
        } catch (const ElementError&) {
            recover();
        }

        if (expect_block("Topics:", "topic_id:")) {
            parse_elements("topic_id:", &Parser::parse_topic, method.topics);
            if (method.topics.empty()) error(cur().span, "expected at least one topic");
        }
        if (expect_block("Indicators:", "Indicator_id:")) {
            parse_elements("Indicator_id:", &Parser::parse_indicator, method.indicators);
            if (method.indicators.empty()) error(cur().span, "expected at least one indicator");
        }
        if (expect_block("Surveys:", "survey_id:")) {
            parse_elements("survey_id:", &Parser::parse_survey, method.surveys);
            if (method.surveys.empty()) error(cur().span, "expected at least one survey");
        }
        if (expect_block("Certification_levels:", "certification_id:")) {
            parse_elements("certification_id:", &Parser::parse_certification,
                           method.certification_levels);
        }
        if (expect_block("Validation_rules:", "rule_id:")) {
            parse_elements("rule_id:", &Parser::parse_rule, method.validation_rules);
            if (method.validation_rules.empty()) {
                error(cur().span, "expected at least one validation rule");
            }
        }
        if (cur().is_kw("survey_id:")) {
            try {
                method.registration_survey = parse_survey();
            } catch (const ElementError&) {
                recover();
            }
        }
        if (!at_end()) {
            error(cur().span, "unexpected content after the model: found " + describe_current());
        }
        return method;
    }
};

Parser make_parser(std::string_view source, std::string file, std::vector<Diagnostic>& lex_diags) {
    LexResult lexed = tokenize(source, file);
    lex_diags = std::move(lexed.diagnostics);
    Parser p;
    p.tokens = std::move(lexed.tokens);
    p.file = std::move(file);
    return p;
}

} // namespace

ParseResult parse_method(std::string_view source, std::string file) {
    std::vector<Diagnostic> lex_diags;
    Parser parser = make_parser(source, file, lex_diags);
    raw::Method method = parser.parse_method_root();

    ParseResult result;
    result.diagnostics = std::move(lex_diags);
    result.diagnostics.insert(result.diagnostics.end(), parser.diags.begin(), parser.diags.end());
    sort_diagnostics(result.diagnostics);
    if (!has_errors(result.diagnostics)) {
        result.model = std::move(method);
    }
    return result;
}

StatementParseResult parse_statement(std::string_view source, std::string file) {
    std::vector<Diagnostic> lex_diags;
    Parser parser = make_parser(source, file, lex_diags);
    StatementParseResult result;
    try {
        StmtPtr stmt = parser.parse_statement_node();
        if (!parser.at_end()) {
            parser.error(parser.cur().span,
                         "unexpected content after the formula: found " +
                             parser.describe_current());
        }
        if (lex_diags.empty() && parser.diags.empty()) {
            result.statement = std::move(stmt);
        }
    } catch (const ElementError&) {
    }
    result.diagnostics = std::move(lex_diags);
    result.diagnostics.insert(result.diagnostics.end(), parser.diags.begin(), parser.diags.end());
    sort_diagnostics(result.diagnostics);
    return result;
}

ExpressionParseResult parse_expression(std::string_view source, std::string file) {
    std::vector<Diagnostic> lex_diags;
    Parser parser = make_parser(source, file, lex_diags);
    ExpressionParseResult result;
    try {
        ExprPtr expr = parser.parse_expr();
        if (!parser.at_end()) {
            parser.error(parser.cur().span,
                         "unexpected content after the expression: found " +
                             parser.describe_current());
        }
        if (lex_diags.empty() && parser.diags.empty()) {
            result.expression = std::move(expr);
        }
    } catch (const ElementError&) {
    }
    result.diagnostics = std::move(lex_diags);
    result.diagnostics.insert(result.diagnostics.end(), parser.diags.begin(), parser.diags.end());
    sort_diagnostics(result.diagnostics);
    return result;
}

} // namespace esea
