#include "esea/ast.hpp"

#include "esea/value.hpp"

#include <cmath>

namespace esea {

const char* to_string(CompareOp op) {
    switch (op) {
    case CompareOp::eq: return "=";
    case CompareOp::neq: return "<>";
    case CompareOp::lt: return "<";
    case CompareOp::le: return "<=";
    case CompareOp::gt: return ">";
    case CompareOp::ge: return ">=";
    case CompareOp::eq2: return "==";
    }
    return "?";
}

const char* to_string(BinaryOp op) {
    switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::logical_or: return "OR";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::logical_and: return "AND";
    }
    return "?";
}

ExprPtr make_expr(Expr::Node node, Span span) {
    return std::make_shared<const Expr>(Expr{std::move(node), span});
}

StmtPtr make_stmt(Stmt::Node node, Span span) {
    return std::make_shared<const Stmt>(Stmt{std::move(node), span});
}

namespace {

struct ExprEq {
    const Expr& other;

    bool operator()(const Expr::NumberLit& a) const {
        const auto* b = std::get_if<Expr::NumberLit>(&other.node);
        return b && a.value == b->value && a.written_as_double == b->written_as_double;
    }
    bool operator()(const Expr::TextLit& a) const {
        const auto* b = std::get_if<Expr::TextLit>(&other.node);
        return b && a.value == b->value;
    }
    bool operator()(const Expr::BoolLit& a) const {
        const auto* b = std::get_if<Expr::BoolLit>(&other.node);
        return b && a.value == b->value;
    }
    bool operator()(const Expr::Ref& a) const {
        const auto* b = std::get_if<Expr::Ref>(&other.node);
        return b && a.indicator == b->indicator;
    }
    bool operator()(const Expr::Compare& a) const {
        const auto* b = std::get_if<Expr::Compare>(&other.node);
        return b && a.op == b->op && structurally_equal(a.left, b->left) &&
               structurally_equal(a.right, b->right);
    }
    bool operator()(const Expr::Binary& a) const {
        const auto* b = std::get_if<Expr::Binary>(&other.node);
        return b && a.op == b->op && structurally_equal(a.left, b->left) &&
               structurally_equal(a.right, b->right);
    }
    bool operator()(const Expr::Pow& a) const {
        const auto* b = std::get_if<Expr::Pow>(&other.node);
        return b && structurally_equal(a.base, b->base) &&
               structurally_equal(a.exponent, b->exponent);
    }
    bool operator()(const Expr::UnaryCall& a) const {
        const auto* b = std::get_if<Expr::UnaryCall>(&other.node);
        return b && a.fn == b->fn && structurally_equal(a.arg, b->arg);
    }
    bool operator()(const Expr::BinaryCall& a) const {
        const auto* b = std::get_if<Expr::BinaryCall>(&other.node);
        return b && a.fn == b->fn && a.target == b->target && structurally_equal(a.arg, b->arg);
    }
    bool operator()(const Expr::StatCall& a) const {
        const auto* b = std::get_if<Expr::StatCall>(&other.node);
        return b && a.fn == b->fn && a.indicator == b->indicator;
    }
};

} // namespace

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a == b) return true;
    return std::visit(ExprEq{*b}, a->node);
}

bool structurally_equal(const StmtPtr& a, const StmtPtr& b) {
    if (!a || !b) return !a && !b;
    if (a == b) return true;
    if (const auto* ea = std::get_if<Stmt::ExprStmt>(&a->node)) {
        const auto* eb = std::get_if<Stmt::ExprStmt>(&b->node);
        return eb && structurally_equal(ea->expr, eb->expr);
    }
    const auto& ia = std::get<Stmt::If>(a->node);
    const auto* ib = std::get_if<Stmt::If>(&b->node);
    return ib && structurally_equal(ia.condition, ib->condition) &&
           structurally_equal(ia.then_branch, ib->then_branch) &&
           structurally_equal(ia.else_branch, ib->else_branch);
}

void for_each_indicator_ref(const Expr& expr,
                            const std::function<void(const std::string&, const Span&)>& fn) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Ref>) {
                fn(node.indicator, expr.span);
            } else if constexpr (std::is_same_v<T, Expr::Compare> ||
                                 std::is_same_v<T, Expr::Binary>) {
                for_each_indicator_ref(*node.left, fn);
                for_each_indicator_ref(*node.right, fn);
            } else if constexpr (std::is_same_v<T, Expr::Pow>) {
                for_each_indicator_ref(*node.base, fn);
                for_each_indicator_ref(*node.exponent, fn);
            } else if constexpr (std::is_same_v<T, Expr::UnaryCall> ||
                                 std::is_same_v<T, Expr::BinaryCall>) {
                for_each_indicator_ref(*node.arg, fn);
            } else if constexpr (std::is_same_v<T, Expr::StatCall>) {
                fn(node.indicator, node.ref_span);
            }
        },
        expr.node);
}

void for_each_indicator_ref(const Stmt& stmt,
                            const std::function<void(const std::string&, const Span&)>& fn) {
    if (const auto* e = std::get_if<Stmt::ExprStmt>(&stmt.node)) {
        for_each_indicator_ref(*e->expr, fn);
        return;
    }
    const auto& i = std::get<Stmt::If>(stmt.node);
    for_each_indicator_ref(*i.condition, fn);
    for_each_indicator_ref(*i.then_branch, fn);
    if (i.else_branch) for_each_indicator_ref(*i.else_branch, fn);
}

} // namespace esea
