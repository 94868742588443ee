#include "esea/analyzer.hpp"

#include "esea/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace esea {

const char* to_string(ValueType t) {
    switch (t) {
    case ValueType::number: return "number";
    case ValueType::text: return "text";
    case ValueType::boolean: return "boolean";
    case ValueType::date: return "date";
    case ValueType::choice: return "choice";
    case ValueType::choice_set: return "choice-set";
    case ValueType::unknown: return "unknown";
    }
    return "?";
}

ValueType value_type_of(DatatypeKind datatype) {
    switch (datatype) {
    case DatatypeKind::text: return ValueType::text;
    case DatatypeKind::integer:
    case DatatypeKind::real: return ValueType::number;
    case DatatypeKind::date: return ValueType::date;
    case DatatypeKind::boolean: return ValueType::boolean;
    case DatatypeKind::single_choice: return ValueType::choice;
    case DatatypeKind::multiple_choice: return ValueType::choice_set;
    }
    return ValueType::unknown;
}

namespace {

using DatatypeLookup = std::function<std::optional<DatatypeKind>(const std::string&)>;

ValueType join_types(ValueType a, ValueType b) {
    if (a == b) return a;
    return ValueType::unknown;
}

ValueType infer_expr_impl(const Expr& e, const DatatypeLookup& datatype_of) {
    return std::visit(
        [&](const auto& node) -> ValueType {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::NumberLit>) {
                return ValueType::number;
            } else if constexpr (std::is_same_v<T, Expr::TextLit>) {
                return ValueType::text;
            } else if constexpr (std::is_same_v<T, Expr::BoolLit>) {
                return ValueType::boolean;
            } else if constexpr (std::is_same_v<T, Expr::Ref>) {
                auto dt = datatype_of(node.indicator);
                return dt ? value_type_of(*dt) : ValueType::unknown;
            } else if constexpr (std::is_same_v<T, Expr::Compare>) {
                return ValueType::boolean;
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                switch (node.op) {
                case BinaryOp::logical_or:
                case BinaryOp::logical_and: return ValueType::boolean;
                case BinaryOp::add: {
                    ValueType l = infer_expr_impl(*node.left, datatype_of);
                    ValueType r = infer_expr_impl(*node.right, datatype_of);
                    if (l == ValueType::text && r == ValueType::text) return ValueType::text;
                    if (l == ValueType::text || r == ValueType::text) return ValueType::unknown;
                    return ValueType::number;
                }
                default: return ValueType::number;
                }
            } else if constexpr (std::is_same_v<T, Expr::Pow> ||
                                 std::is_same_v<T, Expr::UnaryCall> ||
                                 std::is_same_v<T, Expr::BinaryCall> ||
                                 std::is_same_v<T, Expr::StatCall>) {
                return ValueType::number;
            } else {
                return ValueType::unknown;
            }
        },
        e.node);
}

ValueType infer_stmt_impl(const Stmt& s, const DatatypeLookup& datatype_of) {
    if (const auto* e = std::get_if<Stmt::ExprStmt>(&s.node)) {
        return infer_expr_impl(*e->expr, datatype_of);
    }
    const auto& i = std::get<Stmt::If>(s.node);
    ValueType then_type = infer_stmt_impl(*i.then_branch, datatype_of);
    if (!i.else_branch) return then_type;
    return join_types(then_type, infer_stmt_impl(*i.else_branch, datatype_of));
}

bool is_number_like(ValueType t) {
    return t == ValueType::number || t == ValueType::unknown;
}

bool is_boolean_like(ValueType t) {
    return t == ValueType::boolean || t == ValueType::unknown;
}

// Static comparability of known operand types.
bool comparable(ValueType l, ValueType r, CompareOp op) {
    auto textish = [](ValueType t) { return t == ValueType::text || t == ValueType::choice; };
    bool equality = op == CompareOp::eq || op == CompareOp::eq2 || op == CompareOp::neq;
    if (l == ValueType::number && r == ValueType::number) return true;
    if (textish(l) && textish(r)) return true;
    if (l == ValueType::date && (r == ValueType::date || r == ValueType::text)) return true;
    if (r == ValueType::date && l == ValueType::text) return true;
    if (l == ValueType::boolean && r == ValueType::boolean) return equality;
    if (l == ValueType::choice_set && r == ValueType::choice_set) return equality;
    return false;
}

struct TypeChecker {
    const DatatypeLookup& datatype_of;
    std::vector<Diagnostic>& diags;
    std::string file;

    void err(const Span& span, const std::string& message) {
        diags.push_back({Severity::error, "E-TYPE", span, message, file});
    }

    ValueType infer(const Expr& e) { return infer_expr_impl(e, datatype_of); }

    void check(const Expr& e) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Expr::Compare>) {
                    check(*node.left);
                    check(*node.right);
                    ValueType l = infer(*node.left);
                    ValueType r = infer(*node.right);
                    if (l != ValueType::unknown && r != ValueType::unknown &&
                        !comparable(l, r, node.op)) {
                        err(e.span, std::string("operands of '") + to_string(node.op) +
                                        "' are not comparable (" + to_string(l) + " vs " +
                                        to_string(r) + ")");
                    }
                } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                    check(*node.left);
                    check(*node.right);
                    ValueType l = infer(*node.left);
                    ValueType r = infer(*node.right);
                    switch (node.op) {
                    case BinaryOp::logical_or:
                    case BinaryOp::logical_and:
                        if (!is_boolean_like(l) || !is_boolean_like(r)) {
                            err(e.span, std::string("'") + to_string(node.op) +
                                            "' needs boolean operands, got " + to_string(l) +
                                            " and " + to_string(r));
                        }
                        break;
                    case BinaryOp::add: {
                        if (l == ValueType::text && r == ValueType::text) break;
                        if (l == ValueType::unknown || r == ValueType::unknown) {
                            ValueType known = l == ValueType::unknown ? r : l;
                            if (known != ValueType::unknown && known != ValueType::number &&
                                known != ValueType::text) {
                                err(e.span, "'+' joins two texts or two numbers, got " +
                                                std::string(to_string(known)));
                            }
                            break;
                        }
                        if (l != ValueType::number || r != ValueType::number) {
                            err(e.span, "'+' joins two texts or two numbers, got " +
                                            std::string(to_string(l)) + " and " + to_string(r));
                        }
                        break;
                    }
                    default:
                        if (!is_number_like(l)) {
                            err(e.span, std::string("'") + to_string(node.op) +
                                            "' needs number operands, got " + to_string(l));
                        } else if (!is_number_like(r)) {
                            err(e.span, std::string("'") + to_string(node.op) +
                                            "' needs number operands, got " + to_string(r));
                        }
                        break;
                    }
                } else if constexpr (std::is_same_v<T, Expr::Pow>) {
                    check(*node.base);
                    check(*node.exponent);
                    ValueType l = infer(*node.base);
                    ValueType r = infer(*node.exponent);
                    if (!is_number_like(l) || !is_number_like(r)) {
                        err(e.span, "'^' needs number operands, got " + std::string(to_string(l)) +
                                        " and " + to_string(r));
                    }
                } else if constexpr (std::is_same_v<T, Expr::UnaryCall>) {
                    check(*node.arg);
                    ValueType t = infer(*node.arg);
                    if (!is_number_like(t)) {
                        err(e.span, std::string("'") + to_string(node.fn) +
                                        "' needs a number argument, got " + to_string(t));
                    }
                } else if constexpr (std::is_same_v<T, Expr::BinaryCall>) {
                    if (node.fn == BinaryFn::count_if) {
                        if (!std::holds_alternative<Expr::Ref>(node.arg->node)) {
                            diags.push_back({Severity::error, "E-COUNTIF-REF", e.span,
                                             "countIf takes a plain indicator reference as its "
                                             "first argument",
                                             file});
                        }
                    } else {
                        check(*node.arg);
                        ValueType t = infer(*node.arg);
                        if (!is_number_like(t)) {
                            err(e.span, std::string("'") + to_string(node.fn) +
                                            "' needs a number argument, got " + to_string(t));
                        }
                        if (!node.target.is_int()) {
                            err(e.span, std::string("'") + to_string(node.fn) +
                                            "' needs an integer decimal-place count");
                        }
                    }
                } else if constexpr (std::is_same_v<T, Expr::StatCall>) {
                    auto dt = datatype_of(node.indicator);
                    if (dt) {
                        ValueType t = value_type_of(*dt);
                        bool ok;
                        if (node.fn == StatFn::min || node.fn == StatFn::max) {
                            ok = t == ValueType::number || t == ValueType::date ||
                                 t == ValueType::text || t == ValueType::choice;
                        } else {
                            ok = t == ValueType::number;
                        }
                        if (!ok) {
                            err(e.span, std::string("'") + to_string(node.fn) +
                                            "' cannot aggregate a " + to_string(t) + " indicator");
                        }
                    }
                }
            },
            e.node);
    }

    void check(const Stmt& s) {
        if (const auto* e = std::get_if<Stmt::ExprStmt>(&s.node)) {
            check(*e->expr);
            return;
        }
        const auto& i = std::get<Stmt::If>(s.node);
        check(*i.condition);
        ValueType cond = infer(*i.condition);
        if (!is_boolean_like(cond)) {
            err(i.condition->span,
                std::string("IF condition must be boolean, got ") + to_string(cond));
        }
        check(*i.then_branch);
        if (i.else_branch) check(*i.else_branch);
    }
};

struct Analyzer {
    const raw::Method& input;
    std::string file;
    std::vector<Diagnostic> diags;

    std::unordered_map<std::string, std::size_t> topic_ix;
    std::unordered_map<std::string, std::size_t> indicator_ix;

    explicit Analyzer(const raw::Method& m, std::string f) : input(m), file(std::move(f)) {}

    void err(const std::string& code, const Span& span, const std::string& message) {
        diags.push_back({Severity::error, code, span, message, file});
    }

    void warn(const std::string& code, const Span& span, const std::string& message) {
        diags.push_back({Severity::warning, code, span, message, file});
    }

    std::vector<const raw::Survey*> all_surveys() const {
        std::vector<const raw::Survey*> out;
        for (const auto& s : input.surveys) out.push_back(&s);
        if (input.registration_survey) out.push_back(&*input.registration_survey);
        return out;
    }

    std::optional<DatatypeKind> datatype_of(const std::string& name) const {
        auto it = indicator_ix.find(name);
        if (it == indicator_ix.end()) return std::nullopt;
        return input.indicators[it->second].datatype.kind;
    }

    void collect_ids() {
        auto check_unique = [&](std::unordered_map<std::string, Span>& pool, const std::string& id,
                                const Span& span, const char* what) {
            auto [it, inserted] = pool.emplace(id, span);
            if (!inserted) {
                err("E-DUP-ID", span,
                    std::string(what) + " id '" + id + "' is already defined");
            }
        };

        std::unordered_map<std::string, Span> topics, indicators, surveys, sections, questions,
            certifications, rules;
        for (std::size_t i = 0; i < input.topics.size(); ++i) {
            const auto& t = input.topics[i];
            check_unique(topics, t.id, t.id_span, "topic");
            topic_ix.emplace(t.id, i);
        }
        for (std::size_t i = 0; i < input.indicators.size(); ++i) {
            const auto& ind = input.indicators[i];
            check_unique(indicators, ind.id, ind.id_span, "indicator");
            indicator_ix.emplace(ind.id, i);
        }
        for (const raw::Survey* s : all_surveys()) {
            check_unique(surveys, s->id, s->id_span, "survey");
            for (const auto& section : s->sections) {
                check_unique(sections, section.id, section.id_span, "section");
                for (const auto& q : section.questions) {
                    check_unique(questions, q.id, q.id_span, "question");
                }
            }
        }
        for (const auto& c : input.certification_levels) {
            check_unique(certifications, c.id, c.id_span, "certification");
        }
        for (const auto& r : input.validation_rules) {
            check_unique(rules, r.id, r.id_span, "validation rule");
        }
    }

    void check_topics() {
        for (const auto& t : input.topics) {
            if (!t.parent) continue;
            if (!topic_ix.count(t.parent->name)) {
                err("E-UNRESOLVED", t.parent->span,
                    "unknown topic '" + t.parent->name + "'");
            }
        }
        // Parent chains must form a forest.
        enum class Mark { unvisited, visiting, done };
        std::vector<Mark> marks(input.topics.size(), Mark::unvisited);
        for (std::size_t i = 0; i < input.topics.size(); ++i) {
            std::size_t v = i;
            std::vector<std::size_t> chain;
            while (marks[v] == Mark::unvisited) {
                marks[v] = Mark::visiting;
                chain.push_back(v);
                const auto& parent = input.topics[v].parent;
                if (!parent) break;
                auto it = topic_ix.find(parent->name);
                if (it == topic_ix.end()) break;
                v = it->second;
                if (marks[v] == Mark::visiting) {
                    std::string path;
                    bool in_cycle = false;
                    for (std::size_t node : chain) {
                        if (node == v) in_cycle = true;
                        if (!in_cycle) continue;
                        if (!path.empty()) path += " -> ";
                        path += input.topics[node].id;
                    }
                    path += " -> " + input.topics[v].id;
                    err("E-TOPIC-CYCLE", input.topics[v].id_span,
                        "topic parents form a cycle: " + path);
                    break;
                }
            }
            for (std::size_t node : chain) marks[node] = Mark::done;
        }
    }

    void check_indicators() {
        for (const auto& ind : input.indicators) {
            if (!topic_ix.count(ind.topic.name)) {
                err("E-UNRESOLVED", ind.topic.span, "unknown topic '" + ind.topic.name + "'");
            }
            bool choice = ind.datatype.kind == DatatypeKind::single_choice ||
                          ind.datatype.kind == DatatypeKind::multiple_choice;
            if (choice && ind.datatype.options.empty()) {
                err("E-OPT", ind.datatype.span,
                    "choice indicator '" + ind.id + "' declares no answer options");
            }
            if (!choice && !ind.datatype.options.empty()) {
                err("E-OPT", ind.datatype.span,
                    "indicator '" + ind.id + "' has answer options but is not a choice datatype");
            }
            std::set<std::string> texts;
            std::set<long long> orders;
            for (const auto& option : ind.datatype.options) {
                if (!texts.insert(option.text).second) {
                    err("E-OPT", option.span,
                        "duplicate answer option text '" + option.text + "'");
                }
                if (!orders.insert(option.order).second) {
                    err("E-OPT", option.span,
                        "duplicate answer option order " + std::to_string(option.order));
                }
            }
            // Dangling references inside formulas and conditions.
            auto check_refs = [&](const auto& ast) {
                for_each_indicator_ref(ast, [&](const std::string& name, const Span& span) {
                    if (!indicator_ix.count(name)) {
                        err("E-UNRESOLVED", span, "unknown indicator '" + name + "'");
                    }
                });
            };
            if (const auto* direct = std::get_if<raw::DirectKind>(&ind.kind)) {
                if (direct->condition) check_refs(*direct->condition);
            } else {
                check_refs(*std::get<raw::IndirectKind>(ind.kind).formula);
            }
        }
    }

    void check_surveys() {
        for (const raw::Survey* survey : all_surveys()) {
            if (survey->min_threshold < 0) {
                err("E-THRESH", survey->id_span, "MinThreshold cannot be negative");
            }
            std::map<long long, const raw::Section*> section_orders;
            for (const auto& section : survey->sections) {
                auto [it, inserted] = section_orders.emplace(section.order, &section);
                if (!inserted) {
                    err("E-DUP-ORDER", section.id_span,
                        "sections '" + it->second->id + "' and '" + section.id +
                            "' share order " + std::to_string(section.order));
                }
                std::map<long long, const raw::Question*> question_orders;
                for (const auto& q : section.questions) {
                    auto [qit, qinserted] = question_orders.emplace(q.order, &q);
                    if (!qinserted) {
                        err("E-DUP-ORDER", q.id_span,
                            "questions '" + qit->second->id + "' and '" + q.id +
                                "' share order " + std::to_string(q.order));
                    }
                }
                std::set<long long> fragment_orders;
                for (const auto& f : section.fragments) {
                    if (!fragment_orders.insert(f.order).second) {
                        err("E-DUP-ORDER", f.span,
                            "text fragments share order " + std::to_string(f.order));
                    }
                    if (question_orders.count(f.order)) {
                        err("E-DUP-ORDER", f.span,
                            "text fragment and question '" + question_orders[f.order]->id +
                                "' share order " + std::to_string(f.order) +
                                " in section '" + section.id + "'");
                    }
                }
            }
        }
        if (input.registration_survey &&
            input.registration_survey->type != SurveyType::single) {
            err("E-REG-SINGLE", input.registration_survey->id_span,
                "the registration survey must have SurveyType: single");
        }
    }

    void check_questions_and_bindings() {
        struct Binding {
            const raw::Survey* survey;
            const raw::Question* question;
            bool registration;
        };
        std::unordered_map<std::string, std::vector<Binding>> bindings;

        for (const raw::Survey* survey : all_surveys()) {
            bool registration =
                input.registration_survey && survey == &*input.registration_survey;
            for (const auto& section : survey->sections) {
                for (const auto& q : section.questions) {
                    if (!q.indicator) continue;
                    auto it = indicator_ix.find(q.indicator->name);
                    if (it == indicator_ix.end()) {
                        err("E-UNRESOLVED", q.indicator->span,
                            "unknown indicator '" + q.indicator->name + "'");
                        continue;
                    }
                    const raw::Indicator& ind = input.indicators[it->second];
                    if (!std::holds_alternative<raw::DirectKind>(ind.kind)) {
                        err("E-QDIR", q.indicator->span,
                            "question '" + q.id + "' must ask for a direct indicator; '" +
                                ind.id + "' is indirect");
                        continue;
                    }
                    bindings[ind.id].push_back({survey, &q, registration});
                }
            }
        }

        for (const auto& ind : input.indicators) {
            if (!std::holds_alternative<raw::DirectKind>(ind.kind)) continue;
            auto it = bindings.find(ind.id);
            if (it == bindings.end()) {
                warn("W-NO-QUESTION", ind.id_span,
                     "direct indicator '" + ind.id +
                         "' is not asked by any question and will always be missing");
                continue;
            }
            const auto& list = it->second;
            if (list.size() < 2) continue;
            bool mixed_type = false;
            bool involves_registration = false;
            for (const Binding& b : list) {
                if (b.survey->type != list.front().survey->type) mixed_type = true;
                if (b.registration) involves_registration = true;
            }
            const Binding& second = list[1];
            if (mixed_type) {
                err("E-BIND-MIX", second.question->indicator->span,
                    "indicator '" + ind.id +
                        "' is bound by questions in surveys of different types");
            } else if (involves_registration) {
                warn("W-REGBIND", second.question->indicator->span,
                     "indicator '" + ind.id +
                         "' is bound by the registration survey and another survey");
            } else {
                warn("W-MULTIBIND", second.question->indicator->span,
                     "indicator '" + ind.id + "' is bound by more than one question");
            }
        }
    }

    void check_types() {
        DatatypeLookup lookup = [this](const std::string& name) { return datatype_of(name); };
        TypeChecker checker{lookup, diags, file};

        for (const auto& ind : input.indicators) {
            if (const auto* direct = std::get_if<raw::DirectKind>(&ind.kind)) {
                if (!direct->condition) continue;
                checker.check(*direct->condition);
                ValueType t = infer_expr_impl(*direct->condition, lookup);
                if (!is_boolean_like(t)) {
                    err("E-TYPE", direct->condition->span,
                        "condition of '" + ind.id + "' must be boolean, got " + to_string(t));
                }
            } else {
                checker.check(*std::get<raw::IndirectKind>(ind.kind).formula);
            }
        }
        for (const auto& rule : input.validation_rules) {
            checker.check(*rule.condition);
            ValueType t = infer_expr_impl(*rule.condition, lookup);
            if (!is_boolean_like(t)) {
                err("E-TYPE", rule.condition->span,
                    "condition of rule '" + rule.id + "' must be boolean, got " + to_string(t));
            }
        }
        for (const auto& cert : input.certification_levels) {
            for (const auto& req : cert.requirements) {
                auto it = indicator_ix.find(req.name);
                if (it == indicator_ix.end()) {
                    err("E-UNRESOLVED", req.span, "unknown indicator '" + req.name + "'");
                    continue;
                }
                const raw::Indicator& ind = input.indicators[it->second];
                if (std::holds_alternative<raw::DirectKind>(ind.kind)) {
                    if (ind.datatype.kind != DatatypeKind::boolean) {
                        err("E-TYPE", req.span,
                            "requirement '" + req.name + "' must be boolean, got datatype " +
                                to_string(ind.datatype.kind));
                    }
                } else {
                    ValueType t =
                        infer_stmt_impl(*std::get<raw::IndirectKind>(ind.kind).formula, lookup);
                    if (!is_boolean_like(t)) {
                        err("E-TYPE", req.span,
                            "requirement '" + req.name + "' must compute a boolean, got " +
                                to_string(t));
                    }
                }
            }
        }
    }

    void check_cycles() {
        graph::Adjacency adj(input.indicators.size());
        for (std::size_t i = 0; i < input.indicators.size(); ++i) {
            const auto& ind = input.indicators[i];
            auto add_edges = [&](const auto& ast) {
                for_each_indicator_ref(ast, [&](const std::string& name, const Span&) {
                    auto it = indicator_ix.find(name);
                    if (it == indicator_ix.end()) return;
                    if (std::find(adj[i].begin(), adj[i].end(), it->second) == adj[i].end()) {
                        adj[i].push_back(it->second);
                    }
                });
            };
            if (const auto* direct = std::get_if<raw::DirectKind>(&ind.kind)) {
                if (direct->condition) add_edges(*direct->condition);
            } else {
                add_edges(*std::get<raw::IndirectKind>(ind.kind).formula);
            }
        }
        for (const auto& cycle : graph::elementary_cycles(adj)) {
            std::string path;
            for (std::size_t node : cycle) {
                if (!path.empty()) path += " -> ";
                path += input.indicators[node].id;
            }
            path += " -> " + input.indicators[cycle.front()].id;
            err("E-CYCLE", input.indicators[cycle.front()].id_span,
                "formula references form a cycle: " + path);
        }
    }

    Survey build_survey(const raw::Survey& s) const {
        Survey survey;
        survey.id = s.id;
        survey.name = s.name;
        survey.description = s.description;
        survey.type = s.type;
        survey.welcome_txt = s.welcome_txt;
        survey.closing_txt = s.closing_txt;
        survey.min_threshold = s.min_threshold;
        survey.anonymous = s.anonymous;
        for (const auto& rs : s.sections) {
            Section section;
            section.id = rs.id;
            section.title = rs.title;
            section.order = rs.order;
            for (const auto& rq : rs.questions) {
                Question q;
                q.id = rq.id;
                q.name = rq.name;
                q.description = rq.description;
                q.is_mandatory = rq.is_mandatory;
                q.ui = rq.ui;
                q.order = rq.order;
                if (rq.indicator) {
                    auto it = indicator_ix.find(rq.indicator->name);
                    if (it != indicator_ix.end()) q.indicator = it->second;
                }
                q.instruction = rq.instruction;
                section.questions.push_back(std::move(q));
            }
            for (const auto& rf : rs.fragments) {
                section.fragments.push_back(TextFragment{rf.text, rf.order});
            }
            survey.sections.push_back(std::move(section));
        }
        return survey;
    }

    EseaMethod build() const {
        EseaMethod m;
        m.name = input.name;
        m.version = input.version;
        m.is_public = input.is_public;
        m.description = input.description;
        for (const auto& rt : input.topics) {
            Topic t;
            t.id = rt.id;
            t.name = rt.name;
            t.description = rt.description;
            if (rt.parent) {
                auto it = topic_ix.find(rt.parent->name);
                if (it != topic_ix.end()) t.parent = it->second;
            }
            m.topics.push_back(std::move(t));
        }
        for (const auto& ri : input.indicators) {
            Indicator ind;
            ind.id = ri.id;
            ind.name = ri.name;
            ind.description = ri.description;
            ind.pre_unit = ri.pre_unit;
            ind.post_unit = ri.post_unit;
            auto it = topic_ix.find(ri.topic.name);
            ind.topic = it == topic_ix.end() ? 0 : it->second;
            ind.datatype = ri.datatype.kind;
            for (const auto& option : ri.datatype.options) {
                ind.options.push_back(AnswerOption{option.order, option.text});
            }
            if (const auto* direct = std::get_if<raw::DirectKind>(&ri.kind)) {
                ind.kind = DirectKind{direct->condition};
            } else {
                const auto& indirect = std::get<raw::IndirectKind>(ri.kind);
                ind.kind = IndirectKind{indirect.formula, indirect.purpose};
            }
            m.indicators.push_back(std::move(ind));
        }
        for (const auto& rs : input.surveys) m.surveys.push_back(build_survey(rs));
        if (input.registration_survey) {
            m.registration_survey = build_survey(*input.registration_survey);
        }
        for (const auto& rc : input.certification_levels) {
            CertificationLevel level;
            level.id = rc.id;
            level.name = rc.name;
            level.description = rc.description;
            level.level = rc.level;
            level.colour = rc.colour;
            for (const auto& req : rc.requirements) {
                auto it = indicator_ix.find(req.name);
                if (it != indicator_ix.end()) level.requirements.push_back(it->second);
            }
            m.certification_levels.push_back(std::move(level));
        }
        for (const auto& rr : input.validation_rules) {
            m.validation_rules.push_back(
                ValidationRule{rr.id, rr.name, rr.rule_type, rr.condition, rr.message});
        }
        m.finalize();
        return m;
    }

    AnalysisResult run() {
        collect_ids();
        check_topics();
        check_indicators();
        check_surveys();
        check_questions_and_bindings();
        check_types();
        check_cycles();

        AnalysisResult result;
        sort_diagnostics(diags);
        result.diagnostics = std::move(diags);
        if (!has_errors(result.diagnostics)) {
            result.method = build();
        }
        return result;
    }
};

} // namespace

AnalysisResult resolve_and_validate(const raw::Method& raw, std::string file) {
    Analyzer analyzer(raw, std::move(file));
    return analyzer.run();
}

std::vector<std::vector<std::string>> detect_formula_cycles(const EseaMethod& method) {
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
    std::vector<std::vector<std::string>> cycles;
    for (const auto& cycle : graph::elementary_cycles(adj)) {
        std::vector<std::string> ids;
        ids.reserve(cycle.size());
        for (std::size_t node : cycle) ids.push_back(method.indicators[node].id);
        cycles.push_back(std::move(ids));
    }
    return cycles;
}

ValueType infer_expression_type(const Expr& expr, const EseaMethod& method) {
    DatatypeLookup lookup = [&method](const std::string& name) -> std::optional<DatatypeKind> {
        const Indicator* ind = method.find_indicator(name);
        if (!ind) return std::nullopt;
        return ind->datatype;
    };
    return infer_expr_impl(expr, lookup);
}

ValueType infer_statement_type(const Stmt& stmt, const EseaMethod& method) {
    DatatypeLookup lookup = [&method](const std::string& name) -> std::optional<DatatypeKind> {
        const Indicator* ind = method.find_indicator(name);
        if (!ind) return std::nullopt;
        return ind->datatype;
    };
    return infer_stmt_impl(stmt, lookup);
}

} // namespace esea
