#include "esea/printer.hpp"

#include "esea/value.hpp"

#include <sstream>
#include <string>

namespace esea {

std::string quote_string(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    out += '"';
    return out;
}

namespace {

// Precedence levels of the expression ladder, highest binds tightest.
enum Level : int {
    kLevelCompare = 0, // = <> < <= > >= ==
    kLevelSimple = 1,  // + - OR
    kLevelTerm = 2,    // * / AND
    kLevelPow = 3,     // ^
    kLevelBase = 4,    // literals, refs, calls, parenthesized
};

int level_of(const Expr& e) {
    if (std::holds_alternative<Expr::Compare>(e.node)) return kLevelCompare;
    if (const auto* b = std::get_if<Expr::Binary>(&e.node)) {
        switch (b->op) {
        case BinaryOp::add:
        case BinaryOp::sub:
        case BinaryOp::logical_or: return kLevelSimple;
        case BinaryOp::mul:
        case BinaryOp::div:
        case BinaryOp::logical_and: return kLevelTerm;
        }
    }
    if (std::holds_alternative<Expr::Pow>(e.node)) return kLevelPow;
    return kLevelBase;
}

std::string number_lit_text(const Expr::NumberLit& lit) {
    return lit.written_as_double ? format_grammar_double(lit.value)
                                 : format_grammar_int(lit.value);
}

void print_expr(const Expr& e, std::string& out);

// Child rendering: parenthesize when the child binds looser than the
// context, or equally loose on the right of a left-associative operator
// (the grammar builds left-leaning chains only). '^' operands must be
// plain bases.
void print_child(const Expr& child, int min_level, bool parens_at_equal, std::string& out) {
    int lvl = level_of(child);
    bool parens = lvl < min_level || (parens_at_equal && lvl == min_level);
    if (parens) out += '(';
    print_expr(child, out);
    if (parens) out += ')';
}

void print_expr(const Expr& e, std::string& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::NumberLit>) {
                out += number_lit_text(node);
            } else if constexpr (std::is_same_v<T, Expr::TextLit>) {
                out += quote_string(node.value);
            } else if constexpr (std::is_same_v<T, Expr::BoolLit>) {
                out += node.value ? "true" : "false";
            } else if constexpr (std::is_same_v<T, Expr::Ref>) {
                out += '[';
                out += node.indicator;
                out += ']';
            } else if constexpr (std::is_same_v<T, Expr::Compare>) {
                print_child(*node.left, kLevelSimple, false, out);
                out += ' ';
                out += to_string(node.op);
                out += ' ';
                print_child(*node.right, kLevelSimple, false, out);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                int lvl = level_of(e);
                print_child(*node.left, lvl, false, out);
                out += ' ';
                out += to_string(node.op);
                out += ' ';
                print_child(*node.right, lvl, true, out);
            } else if constexpr (std::is_same_v<T, Expr::Pow>) {
                print_child(*node.base, kLevelBase, false, out);
                out += " ^ ";
                print_child(*node.exponent, kLevelBase, false, out);
            } else if constexpr (std::is_same_v<T, Expr::UnaryCall>) {
                out += to_string(node.fn);
                out += '(';
                print_expr(*node.arg, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, Expr::BinaryCall>) {
                out += to_string(node.fn);
                out += '(';
                print_expr(*node.arg, out);
                out += ", ";
                if (node.target.is_int()) {
                    out += std::to_string(node.target.as_int());
                } else {
                    out += quote_string(node.target.as_string());
                }
                out += ')';
            } else if constexpr (std::is_same_v<T, Expr::StatCall>) {
                out += to_string(node.fn);
                out += "([";
                out += node.indicator;
                out += "])";
            }
        },
        e.node);
}

void print_stmt(const Stmt& s, std::string& out) {
    if (const auto* e = std::get_if<Stmt::ExprStmt>(&s.node)) {
        print_expr(*e->expr, out);
        return;
    }
    const auto& i = std::get<Stmt::If>(s.node);
    out += "IF ";
    print_expr(*i.condition, out);
    out += " THEN ";
    print_stmt(*i.then_branch, out);
    if (i.else_branch) {
        out += " ELSE ";
        print_stmt(*i.else_branch, out);
    }
}

struct ModelPrinter {
    std::ostringstream out;
    int indent = 0;

    void line(const std::string& text) {
        for (int i = 0; i < indent; ++i) out << "  ";
        out << text << '\n';
    }

    std::string expr_text(const Expr& e) {
        std::string s;
        print_expr(e, s);
        return s;
    }

    std::string stmt_text(const Stmt& s) {
        std::string t;
        print_stmt(s, t);
        return t;
    }

    void print_topic(const raw::Topic& t) {
        line("topic_id: " + t.id);
        indent++;
        line("Name: " + quote_string(t.name));
        line("Description: " + quote_string(t.description));
        if (t.parent) line("Parent_topic: " + t.parent->name);
        indent--;
    }

    void print_indicator(const raw::Indicator& ind) {
        line("Indicator_id: " + ind.id);
        indent++;
        line("Name: " + quote_string(ind.name));
        line("Description: " + quote_string(ind.description));
        if (ind.pre_unit) line("PreUnit: " + quote_string(*ind.pre_unit));
        if (ind.post_unit) line("PostUnit: " + quote_string(*ind.post_unit));
        line("Topic: " + ind.topic.name);
        if (const auto* direct = std::get_if<raw::DirectKind>(&ind.kind)) {
            line("Indicator_type: Direct");
            if (direct->condition) line("Condition: " + expr_text(*direct->condition));
        } else {
            const auto& indirect = std::get<raw::IndirectKind>(ind.kind);
            line("Indicator_type: Indirect");
            line("Formula: " + stmt_text(*indirect.formula));
            if (indirect.purpose_stated) {
                line(std::string("Purpose: ") + to_string(indirect.purpose));
            }
        }
        line(std::string("DataType: ") + to_string(ind.datatype.kind));
        if (!ind.datatype.options.empty()) {
            indent++;
            line("Answer_options:");
            indent++;
            for (const auto& option : ind.datatype.options) {
                line("Order: " + std::to_string(option.order));
                line("Text: " + quote_string(option.text));
            }
            indent -= 2;
        }
        indent--;
    }

    void print_question(const raw::Question& q) {
        line("question_id: " + q.id);
        indent++;
        line("Name: " + quote_string(q.name));
        line("Description: " + quote_string(q.description));
        line(std::string("isMandatory: ") + (q.is_mandatory ? "true" : "false"));
        line(std::string("UIComponent: ") + to_string(q.ui));
        line("Order: " + std::to_string(q.order));
        if (q.indicator) {
            line("Indicator: " + q.indicator->name);
        } else {
            line("Indicator:");
        }
        line("Instruction: " + quote_string(q.instruction));
        indent--;
    }

    void print_section(const raw::Section& s) {
        line("section_id: " + s.id);
        indent++;
        line("Title: " + quote_string(s.title));
        line("Order: " + std::to_string(s.order));
        line("Questions:");
        indent++;
        for (const auto& q : s.questions) print_question(q);
        indent--;
        if (!s.fragments.empty()) {
            line("TextFragments:");
            indent++;
            for (const auto& f : s.fragments) {
                line("Text: " + quote_string(f.text));
                line("Order: " + std::to_string(f.order));
            }
            indent--;
        }
        indent--;
    }

    void print_survey(const raw::Survey& s) {
        line("survey_id: " + s.id);
        indent++;
        line("Name: " + quote_string(s.name));
        line("Description: " + quote_string(s.description));
        line(std::string("SurveyType: ") + to_string(s.type));
        if (s.welcome_txt) line("WelcomeTxt: " + quote_string(*s.welcome_txt));
        if (s.closing_txt) line("ClosingTxt: " + quote_string(*s.closing_txt));
        line("MinThreshold: " + format_grammar_double(s.min_threshold));
        if (s.anonymous) line(std::string("Anonymous: ") + (*s.anonymous ? "true" : "false"));
        line("Sections:");
        indent++;
        for (const auto& section : s.sections) print_section(section);
        indent -= 2;
    }

    void print_certification(const raw::CertificationLevel& c) {
        line("certification_id: " + c.id);
        indent++;
        line("Name: " + quote_string(c.name));
        line("Description: " + quote_string(c.description));
        line("Level: " + format_grammar_double(c.level));
        line("Colour: " + quote_string(c.colour));
        std::string reqs = "Requirements: ";
        for (std::size_t i = 0; i < c.requirements.size(); ++i) {
            if (i) reqs += ", ";
            reqs += "[" + c.requirements[i].name + "]";
        }
        line(reqs);
        indent--;
    }

    void print_rule(const raw::ValidationRule& r) {
        line("rule_id: " + r.id);
        indent++;
        line("Name: " + quote_string(r.name));
        line(std::string("RuleType: ") + to_string(r.rule_type));
        line("Condition: " + expr_text(*r.condition));
        line("Message: " + quote_string(r.message));
        indent--;
    }

    std::string print(const raw::Method& m) {
        line("Name: " + quote_string(m.name));
        line("Version: " + format_grammar_double(m.version));
        line(std::string("isPublic: ") + (m.is_public ? "true" : "false"));
        line("Description: " + quote_string(m.description));
        line("Topics:");
        indent++;
        for (const auto& t : m.topics) print_topic(t);
        indent--;
        line("Indicators:");
        indent++;
        for (const auto& ind : m.indicators) print_indicator(ind);
        indent--;
        line("Surveys:");
        indent++;
        for (const auto& s : m.surveys) print_survey(s);
        indent--;
        line("Certification_levels:");
        indent++;
        for (const auto& c : m.certification_levels) print_certification(c);
        indent--;
        line("Validation_rules:");
        indent++;
        for (const auto& r : m.validation_rules) print_rule(r);
        indent--;
        if (m.registration_survey) {
            print_survey(*m.registration_survey);
        }
        return out.str();
    }
};

} // namespace

std::string pretty_print(const raw::Method& model) {
    ModelPrinter printer;
    return printer.print(model);
}

std::string print_statement(const Stmt& stmt) {
    std::string out;
    print_stmt(stmt, out);
    return out;
}

std::string print_expression(const Expr& expr) {
    std::string out;
    print_expr(expr, out);
    return out;
}

} // namespace esea
