#pragma once

#include "esea/ast.hpp"
#include "esea/model.hpp"
#include "esea/value.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace esea {

// Diagnostic raised while evaluating an account; carries no source span,
// only the indicator or rule it belongs to.
struct RuntimeDiag {
    Severity severity = Severity::warning;
    std::string code;
    std::string context; // e.g. "indicator gender_pay_gap"
    std::string message;

    bool operator==(const RuntimeDiag&) const = default;
};

// Hard evaluation failure (type mismatch, bare multiset reference).
// evaluate_all converts these into E-RT-* diagnostics per indicator.
class EvalError : public std::runtime_error {
public:
    EvalError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Value bindings for one evaluation run. An indicator id lives in at most
// one of scalars/multisets; invalidated ids (failed survey threshold,
// false condition) answer Missing to every lookup.
struct EvalContext {
    const EseaMethod* method = nullptr;
    std::unordered_map<std::string, Value> scalars;
    std::unordered_map<std::string, std::vector<Value>> multisets;
    std::unordered_set<std::string> invalidated;
    std::unordered_map<std::string, std::string> missing_cause;
    std::vector<RuntimeDiag> diags;

    void bind_scalar(const std::string& id, Value v);
    void bind_multiset(const std::string& id, std::vector<Value> values);
    void invalidate(const std::string& id, const std::string& cause);
    void note_cause(const std::string& id, const std::string& cause);

    void warn(const std::string& code, const std::string& context, const std::string& message);
};

struct DependencyPlan {
    std::vector<std::string> order; // every indicator precedes its referrers
};

// Topological order of the reference graph; ties broken by declaration
// order. Precondition: detect_formula_cycles(method) is empty.
DependencyPlan dependency_order(const EseaMethod& method);

Value evaluate_statement(const Stmt& stmt, EvalContext& ctx);
Value evaluate_expression(const Expr& expr, EvalContext& ctx);

// abs | int. Missing passes through; non-numbers raise E-RT-TYPE.
Value apply_unary(UnaryFn fn, const Value& v);

// roundUp | roundDown | round over a number and a decimal-place count.
Value apply_binary(BinaryFn fn, const Value& left, const BinaryArg& arg);

// countIf over a response multiset (rounding functions reject multisets).
Value apply_binary(BinaryFn fn, std::span<const Value> multiset, const BinaryArg& arg);

// min | max | sum | avg | mode | median. Empty input yields Missing;
// min/max also take dates and texts, the rest are number-only.
Value apply_statistical(StatFn fn, std::span<const Value> values);

// Runs the whole method: direct conditions gate their indicators, indirect
// formulas evaluate in dependency order and memoize into ctx. A failing
// indicator records a diagnostic and yields Missing; evaluation continues.
std::map<std::string, Value> evaluate_all(const EseaMethod& method, EvalContext& ctx);

} // namespace esea
