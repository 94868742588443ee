#include "esea/eval.hpp"

#include "esea/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace esea {

void EvalContext::bind_scalar(const std::string& id, Value v) {
    multisets.erase(id);
    scalars[id] = std::move(v);
}

void EvalContext::bind_multiset(const std::string& id, std::vector<Value> values) {
    scalars.erase(id);
    multisets[id] = std::move(values);
}

void EvalContext::invalidate(const std::string& id, const std::string& cause) {
    scalars.erase(id);
    multisets.erase(id);
    invalidated.insert(id);
    note_cause(id, cause);
}

void EvalContext::note_cause(const std::string& id, const std::string& cause) {
    missing_cause.emplace(id, cause); // first cause wins
}

void EvalContext::warn(const std::string& code, const std::string& context,
                       const std::string& message) {
    diags.push_back({Severity::warning, code, context, message});
}

namespace {

[[noreturn]] void type_error(const std::string& message) {
    throw EvalError("E-RT-TYPE", message);
}

const char* category_name(const Value& v) {
    if (v.is_number()) return "number";
    if (v.is_text()) return "text";
    if (v.is_bool()) return "boolean";
    if (v.is_date()) return "date";
    if (v.is_choice()) return "choice";
    if (v.is_choice_set()) return "choice-set";
    return "missing";
}

bool relational(CompareOp op) {
    return op == CompareOp::lt || op == CompareOp::le || op == CompareOp::gt ||
           op == CompareOp::ge;
}

Value compare_ordered(CompareOp op, int cmp) {
    switch (op) {
    case CompareOp::eq:
    case CompareOp::eq2: return Value::boolean(cmp == 0);
    case CompareOp::neq: return Value::boolean(cmp != 0);
    case CompareOp::lt: return Value::boolean(cmp < 0);
    case CompareOp::le: return Value::boolean(cmp <= 0);
    case CompareOp::gt: return Value::boolean(cmp > 0);
    case CompareOp::ge: return Value::boolean(cmp >= 0);
    }
    return Value::missing();
}

// Texts and single choices compare interchangeably.
const std::string* textish(const Value& v) {
    if (v.is_text()) return &v.as_text();
    if (v.is_choice()) return &v.as_choice().text;
    return nullptr;
}

Value compare_values(CompareOp op, const Value& l, const Value& r) {
    if (l.is_number() && r.is_number()) {
        double a = l.as_number(), b = r.as_number();
        switch (op) {
        case CompareOp::eq:
        case CompareOp::eq2: return Value::boolean(number_equal(a, b));
        case CompareOp::neq: return Value::boolean(!number_equal(a, b));
        case CompareOp::lt: return Value::boolean(a < b);
        case CompareOp::le: return Value::boolean(a <= b);
        case CompareOp::gt: return Value::boolean(a > b);
        case CompareOp::ge: return Value::boolean(a >= b);
        }
    }
    if (const std::string* lt = textish(l)) {
        if (const std::string* rt = textish(r)) {
            return compare_ordered(op, lt->compare(*rt) < 0   ? -1
                                       : lt->compare(*rt) > 0 ? 1
                                                              : 0);
        }
    }
    // Dates compare chronologically, also against ISO-8601 text.
    auto as_date = [](const Value& v) -> std::optional<Date> {
        if (v.is_date()) return v.as_date();
        if (const std::string* t = textish(v)) return Date::parse(*t);
        return std::nullopt;
    };
    if (l.is_date() || r.is_date()) {
        auto dl = as_date(l), dr = as_date(r);
        if (!dl || !dr) {
            type_error(std::string("cannot compare ") + category_name(l) + " with " +
                       category_name(r));
        }
        int cmp = *dl < *dr ? -1 : (*dr < *dl ? 1 : 0);
        return compare_ordered(op, cmp);
    }
    if (l.is_bool() && r.is_bool()) {
        if (relational(op)) type_error("booleans only support = and <>");
        bool eq = l.as_bool() == r.as_bool();
        return Value::boolean(op == CompareOp::neq ? !eq : eq);
    }
    if (l.is_choice_set() && r.is_choice_set()) {
        if (relational(op)) type_error("choice sets only support = and <>");
        bool eq = l.as_choice_set() == r.as_choice_set();
        return Value::boolean(op == CompareOp::neq ? !eq : eq);
    }
    type_error(std::string("cannot compare ") + category_name(l) + " with " + category_name(r));
}

// countIf entry matching; Missing entries and foreign categories never match.
bool count_if_matches(const Value& entry, const BinaryArg& target) {
    if (entry.is_missing()) return false;
    if (target.is_int()) {
        return entry.is_number() &&
               number_equal(entry.as_number(), static_cast<double>(target.as_int()));
    }
    const std::string& want = target.as_string();
    if (const std::string* t = textish(entry)) return *t == want;
    if (entry.is_choice_set()) return entry.as_choice_set().contains(want);
    if (entry.is_date()) {
        auto d = Date::parse(want);
        return d && entry.as_date() == *d;
    }
    if (entry.is_bool()) return false;
    return false;
}

enum class LookupKind { scalar, multiset, invalidated, absent };

LookupKind lookup_kind(const EvalContext& ctx, const std::string& id) {
    if (ctx.invalidated.count(id)) return LookupKind::invalidated;
    if (ctx.scalars.count(id)) return LookupKind::scalar;
    if (ctx.multisets.count(id)) return LookupKind::multiset;
    return LookupKind::absent;
}

} // namespace

Value apply_unary(UnaryFn fn, const Value& v) {
    if (v.is_missing()) return Value::missing();
    if (!v.is_number()) {
        type_error(std::string("'") + to_string(fn) + "' needs a number, got " +
                   category_name(v));
    }
    double x = v.as_number();
    return Value::number(fn == UnaryFn::abs ? std::fabs(x) : std::trunc(x));
}

namespace {

Value apply_rounding(BinaryFn fn, const Value& left, const BinaryArg& arg) {
    if (!arg.is_int()) {
        type_error(std::string("'") + to_string(fn) +
                   "' needs an integer decimal-place count, got a string");
    }
    if (left.is_missing()) return Value::missing();
    if (!left.is_number()) {
        type_error(std::string("'") + to_string(fn) + "' needs a number, got " +
                   category_name(left));
    }
    // Beyond double precision extra places are a no-op.
    int places = static_cast<int>(std::min<long long>(arg.as_int(), 18));
    double x = left.as_number();
    switch (fn) {
    case BinaryFn::round_up: return Value::number(ceil_at_places(x, places));
    case BinaryFn::round_down: return Value::number(floor_at_places(x, places));
    case BinaryFn::round: return Value::number(round_half_away(x, places));
    default: break;
    }
    type_error("countIf needs a response multiset");
}

} // namespace

Value apply_binary(BinaryFn fn, const Value& left, const BinaryArg& arg) {
    if (fn == BinaryFn::count_if) {
        // Degenerate single-response form: a scalar counts as 0 or 1.
        return Value::number(count_if_matches(left, arg) ? 1 : 0);
    }
    return apply_rounding(fn, left, arg);
}

Value apply_binary(BinaryFn fn, std::span<const Value> multiset, const BinaryArg& arg) {
    if (fn != BinaryFn::count_if) {
        type_error(std::string("'") + to_string(fn) +
                   "' needs a single number, not a response multiset");
    }
    long long count = 0;
    for (const Value& entry : multiset) {
        if (count_if_matches(entry, arg)) ++count;
    }
    return Value::number(static_cast<double>(count));
}

Value apply_statistical(StatFn fn, std::span<const Value> values) {
    std::vector<const Value*> entries;
    entries.reserve(values.size());
    for (const Value& v : values) {
        if (!v.is_missing()) entries.push_back(&v);
    }
    if (entries.empty()) return Value::missing();

    bool all_numbers = std::all_of(entries.begin(), entries.end(),
                                   [](const Value* v) { return v->is_number(); });

    if (fn == StatFn::min || fn == StatFn::max) {
        bool all_text = std::all_of(entries.begin(), entries.end(),
                                    [](const Value* v) { return textish(*v) != nullptr; });
        bool all_dates = std::all_of(entries.begin(), entries.end(),
                                     [](const Value* v) { return v->is_date(); });
        if (!all_numbers && !all_text && !all_dates) {
            type_error(std::string("'") + to_string(fn) +
                       "' needs numbers, dates or texts of one kind");
        }
        auto less = [&](const Value* a, const Value* b) {
            if (all_numbers) return a->as_number() < b->as_number();
            if (all_dates) return a->as_date() < b->as_date();
            return *textish(*a) < *textish(*b);
        };
        auto it = fn == StatFn::min ? std::min_element(entries.begin(), entries.end(), less)
                                    : std::max_element(entries.begin(), entries.end(), less);
        return **it;
    }

    if (!all_numbers) {
        type_error(std::string("'") + to_string(fn) + "' needs a multiset of numbers");
    }
    std::vector<double> xs;
    xs.reserve(entries.size());
    for (const Value* v : entries) xs.push_back(v->as_number());

    switch (fn) {
    case StatFn::sum: {
        double total = 0;
        for (double x : xs) total += x;
        return Value::number(total);
    }
    case StatFn::avg: {
        double total = 0;
        for (double x : xs) total += x;
        return Value::number(total / static_cast<double>(xs.size()));
    }
    case StatFn::median: {
        std::sort(xs.begin(), xs.end());
        std::size_t n = xs.size();
        if (n % 2 == 1) return Value::number(xs[n / 2]);
        return Value::number((xs[n / 2 - 1] + xs[n / 2]) / 2.0);
    }
    case StatFn::mode: {
        // Exact-value grouping; ties resolve to the smallest value.
        std::map<double, std::size_t> freq;
        for (double x : xs) ++freq[x];
        double best = xs[0];
        std::size_t best_count = 0;
        for (const auto& [value, count] : freq) {
            if (count > best_count) {
                best = value;
                best_count = count;
            }
        }
        return Value::number(best);
    }
    default: break;
    }
    return Value::missing();
}

namespace {

struct Evaluator {
    EvalContext& ctx;
    std::string context_label;

    void warn(const std::string& code, const std::string& message) {
        ctx.warn(code, context_label, message);
    }

    Value ref_value(const std::string& id) {
        switch (lookup_kind(ctx, id)) {
        case LookupKind::invalidated:
        case LookupKind::absent: return Value::missing();
        case LookupKind::scalar: return ctx.scalars.at(id);
        case LookupKind::multiset:
            throw EvalError("E-RT-MULTI",
                            "indicator '" + id +
                                "' holds multi-response data; wrap it in a statistical "
                                "function or countIf");
        }
        return Value::missing();
    }

    Value stat_value(StatFn fn, const std::string& id) {
        switch (lookup_kind(ctx, id)) {
        case LookupKind::invalidated:
        case LookupKind::absent: return Value::missing();
        case LookupKind::multiset: return apply_statistical(fn, ctx.multisets.at(id));
        case LookupKind::scalar: {
            const Value& v = ctx.scalars.at(id);
            if (v.is_missing()) return Value::missing();
            return apply_statistical(fn, std::span<const Value>(&v, 1));
        }
        }
        return Value::missing();
    }

    Value count_if_value(const std::string& id, const BinaryArg& target) {
        switch (lookup_kind(ctx, id)) {
        case LookupKind::invalidated: return Value::missing();
        case LookupKind::absent: return Value::number(0);
        case LookupKind::multiset:
            return apply_binary(BinaryFn::count_if, std::span<const Value>(ctx.multisets.at(id)),
                                target);
        case LookupKind::scalar:
            return apply_binary(BinaryFn::count_if, ctx.scalars.at(id), target);
        }
        return Value::missing();
    }

    Value eval(const Expr& e) {
        return std::visit(
            [&](const auto& node) -> Value {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Expr::NumberLit>) {
                    return Value::number(node.value);
                } else if constexpr (std::is_same_v<T, Expr::TextLit>) {
                    return Value::text(node.value);
                } else if constexpr (std::is_same_v<T, Expr::BoolLit>) {
                    return Value::boolean(node.value);
                } else if constexpr (std::is_same_v<T, Expr::Ref>) {
                    return ref_value(node.indicator);
                } else if constexpr (std::is_same_v<T, Expr::Compare>) {
                    Value l = eval(*node.left);
                    Value r = eval(*node.right);
                    if (l.is_missing() || r.is_missing()) return Value::missing();
                    return compare_values(node.op, l, r);
                } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                    return eval_binary(node);
                } else if constexpr (std::is_same_v<T, Expr::Pow>) {
                    Value l = eval(*node.base);
                    Value r = eval(*node.exponent);
                    if (l.is_missing() || r.is_missing()) return Value::missing();
                    if (!l.is_number() || !r.is_number()) {
                        type_error(std::string("'^' needs numbers, got ") + category_name(l) +
                                   " and " + category_name(r));
                    }
                    double result = std::pow(l.as_number(), r.as_number());
                    if (!std::isfinite(result)) {
                        warn("W-RT-DOMAIN", "'^' left the real domain (base " +
                                                format_number(l.as_number()) + ", exponent " +
                                                format_number(r.as_number()) + ")");
                        return Value::missing();
                    }
                    return Value::number(result);
                } else if constexpr (std::is_same_v<T, Expr::UnaryCall>) {
                    return apply_unary(node.fn, eval(*node.arg));
                } else if constexpr (std::is_same_v<T, Expr::BinaryCall>) {
                    if (node.fn == BinaryFn::count_if) {
                        const auto* ref = std::get_if<Expr::Ref>(&node.arg->node);
                        if (!ref) {
                            type_error("countIf needs a plain indicator reference as its first "
                                       "argument");
                        }
                        return count_if_value(ref->indicator, node.target);
                    }
                    return apply_binary(node.fn, eval(*node.arg), node.target);
                } else if constexpr (std::is_same_v<T, Expr::StatCall>) {
                    return stat_value(node.fn, node.indicator);
                } else {
                    return Value::missing();
                }
            },
            e.node);
    }

    Value eval_binary(const Expr::Binary& node) {
        if (node.op == BinaryOp::logical_and || node.op == BinaryOp::logical_or) {
            bool is_and = node.op == BinaryOp::logical_and;
            Value l = eval(*node.left);
            if (l.is_bool() && l.as_bool() == !is_and) {
                return Value::boolean(!is_and); // false AND x / true OR x decide left
            }
            if (!l.is_bool() && !l.is_missing()) {
                type_error(std::string("'") + (is_and ? "AND" : "OR") +
                           "' needs booleans, got " + category_name(l));
            }
            Value r = eval(*node.right);
            if (l.is_missing() || r.is_missing()) return Value::missing();
            if (!r.is_bool()) {
                type_error(std::string("'") + (is_and ? "AND" : "OR") +
                           "' needs booleans, got " + category_name(r));
            }
            return Value::boolean(is_and ? (l.as_bool() && r.as_bool())
                                         : (l.as_bool() || r.as_bool()));
        }

        Value l = eval(*node.left);
        Value r = eval(*node.right);
        if (l.is_missing() || r.is_missing()) return Value::missing();
        if (node.op == BinaryOp::add && l.is_text() && r.is_text()) {
            return Value::text(l.as_text() + r.as_text());
        }
        if (!l.is_number() || !r.is_number()) {
            type_error(std::string("'") + to_string(node.op) + "' needs numbers, got " +
                       category_name(l) + " and " + category_name(r));
        }
        double a = l.as_number(), b = r.as_number();
        switch (node.op) {
        case BinaryOp::add: return Value::number(a + b);
        case BinaryOp::sub: return Value::number(a - b);
        case BinaryOp::mul: return Value::number(a * b);
        case BinaryOp::div:
            if (b == 0) {
                warn("W-RT-DIV0", "division by zero");
                return Value::missing();
            }
            return Value::number(a / b);
        default: break;
        }
        return Value::missing();
    }

    Value eval(const Stmt& s) {
        if (const auto* e = std::get_if<Stmt::ExprStmt>(&s.node)) {
            return eval(*e->expr);
        }
        const auto& i = std::get<Stmt::If>(s.node);
        Value cond = eval(*i.condition);
        if (cond.is_missing()) return Value::missing();
        if (!cond.is_bool()) {
            type_error(std::string("IF condition must be boolean, got ") + category_name(cond));
        }
        if (cond.as_bool()) return eval(*i.then_branch);
        if (i.else_branch) return eval(*i.else_branch);
        return Value::missing();
    }
};

graph::Adjacency reference_graph(const EseaMethod& method) {
    graph::Adjacency adj(method.indicators.size());
    for (std::size_t i = 0; i < method.indicators.size(); ++i) {
        const Indicator& ind = method.indicators[i];
        auto add_edges = [&](const auto& ast) {
            for_each_indicator_ref(ast, [&](const std::string& name, const Span&) {
                auto target = method.indicator_index_of(name);
                if (!target) return;
                if (std::find(adj[i].begin(), adj[i].end(), *target) == adj[i].end()) {
                    adj[i].push_back(*target);
                }
            });
        };
        if (ind.is_direct()) {
            if (ind.direct().condition) add_edges(*ind.direct().condition);
        } else {
            add_edges(*ind.indirect().formula);
        }
    }
    return adj;
}

} // namespace

DependencyPlan dependency_order(const EseaMethod& method) {
    graph::Adjacency adj = reference_graph(method);
    std::vector<std::size_t> order = graph::topological_order(adj);
    if (order.size() != method.indicators.size()) {
        throw std::logic_error("dependency_order called on a cyclic model");
    }
    DependencyPlan plan;
    plan.order.reserve(order.size());
    for (std::size_t ix : order) plan.order.push_back(method.indicators[ix].id);
    return plan;
}

Value evaluate_statement(const Stmt& stmt, EvalContext& ctx) {
    Evaluator ev{ctx, "formula"};
    return ev.eval(stmt);
}

Value evaluate_expression(const Expr& expr, EvalContext& ctx) {
    Evaluator ev{ctx, "expression"};
    return ev.eval(expr);
}

std::map<std::string, Value> evaluate_all(const EseaMethod& method, EvalContext& ctx) {
    ctx.method = &method;
    std::map<std::string, Value> values;
    DependencyPlan plan = dependency_order(method);

    for (const std::string& id : plan.order) {
        const Indicator* ind = method.find_indicator(id);
        Evaluator ev{ctx, "indicator " + id};

        if (ind->is_direct()) {
            const DirectKind& direct = ind->direct();
            if (direct.condition) {
                bool applicable = true;
                try {
                    Value cond = ev.eval(*direct.condition);
                    if (cond.is_missing()) {
                        ctx.invalidate(id, "condition could not be evaluated");
                        applicable = false;
                    } else if (!cond.is_bool()) {
                        throw EvalError("E-RT-TYPE", "condition must be boolean, got " +
                                                         std::string(category_name(cond)));
                    } else if (!cond.as_bool()) {
                        ctx.invalidate(id, "condition is false; indicator not applicable");
                        applicable = false;
                    }
                } catch (const EvalError& e) {
                    ctx.diags.push_back(
                        {Severity::error, e.code(), "indicator " + id, e.what()});
                    ctx.invalidate(id, "condition failed to evaluate");
                    applicable = false;
                }
                if (!applicable) {
                    values[id] = Value::missing();
                    continue;
                }
            }
            switch (lookup_kind(ctx, id)) {
            case LookupKind::scalar: values[id] = ctx.scalars.at(id); break;
            case LookupKind::multiset:
                values[id] = Value::missing();
                ctx.note_cause(id, "multi-response data; aggregate with a statistical function");
                break;
            case LookupKind::invalidated: values[id] = Value::missing(); break;
            case LookupKind::absent:
                values[id] = Value::missing();
                ctx.note_cause(id, "no answer");
                break;
            }
            continue;
        }

        const IndirectKind& indirect = ind->indirect();
        Value v;
        try {
            v = ev.eval(*indirect.formula);
        } catch (const EvalError& e) {
            ctx.diags.push_back({Severity::error, e.code(), "indicator " + id, e.what()});
            v = Value::missing();
            ctx.note_cause(id, "formula failed to evaluate");
        }
        if (v.is_missing()) {
            ctx.note_cause(id, "formula yielded no value");
        } else {
            ctx.bind_scalar(id, v);
        }
        values[id] = std::move(v);
    }
    return values;
}

} // namespace esea
