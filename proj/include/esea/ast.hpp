#pragma once

#include "esea/diagnostics.hpp"
#include "esea/enums.hpp"

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace esea {

enum class CompareOp { eq, neq, lt, le, gt, ge, eq2 }; // = <> < <= > >= ==

// + - OR (simple-expression level), * / AND (term level).
enum class BinaryOp { add, sub, logical_or, mul, div, logical_and };

const char* to_string(CompareOp op);
const char* to_string(BinaryOp op);

struct Expr;
struct Stmt;
using ExprPtr = std::shared_ptr<const Expr>;
using StmtPtr = std::shared_ptr<const Stmt>;

// Second argument of a binary numeric call: INT or STRING.
struct BinaryArg {
    std::variant<long long, std::string> value;
    bool is_int() const { return std::holds_alternative<long long>(value); }
    long long as_int() const { return std::get<long long>(value); }
    const std::string& as_string() const { return std::get<std::string>(value); }
    bool operator==(const BinaryArg&) const = default;
};

struct Expr {
    struct NumberLit {
        double value = 0;
        bool written_as_double = false; // "2.0" vs "2"
    };
    struct TextLit {
        std::string value;
    };
    struct BoolLit {
        bool value = false;
    };
    // [indicator_id]
    struct Ref {
        std::string indicator;
    };
    struct Compare {
        CompareOp op;
        ExprPtr left;
        ExprPtr right;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr left;
        ExprPtr right;
    };
    // base ^ exponent; the grammar allows exactly one exponent per factor.
    struct Pow {
        ExprPtr base;
        ExprPtr exponent;
    };
    struct UnaryCall {
        UnaryFn fn;
        ExprPtr arg;
    };
    struct BinaryCall {
        BinaryFn fn;
        ExprPtr arg;
        BinaryArg target;
    };
    // fn([indicator_id])
    struct StatCall {
        StatFn fn;
        std::string indicator;
        Span ref_span;
    };

    using Node = std::variant<NumberLit, TextLit, BoolLit, Ref, Compare, Binary, Pow,
                              UnaryCall, BinaryCall, StatCall>;

    Node node;
    Span span;
};

struct Stmt {
    struct ExprStmt {
        ExprPtr expr;
    };
    struct If {
        ExprPtr condition;
        StmtPtr then_branch;
        StmtPtr else_branch; // nullable
    };

    using Node = std::variant<ExprStmt, If>;

    Node node;
    Span span;
};

ExprPtr make_expr(Expr::Node node, Span span);
StmtPtr make_stmt(Stmt::Node node, Span span);

// Deep equality ignoring spans.
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);
bool structurally_equal(const StmtPtr& a, const StmtPtr& b);

// Invokes fn for every indicator reference (plain refs and statistical-call
// targets), in source order.
void for_each_indicator_ref(const Expr& expr,
                            const std::function<void(const std::string&, const Span&)>& fn);
void for_each_indicator_ref(const Stmt& stmt,
                            const std::function<void(const std::string&, const Span&)>& fn);

} // namespace esea
