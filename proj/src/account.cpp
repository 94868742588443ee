#include "esea/account.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace esea {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

Diagnostic file_diag(Severity severity, std::string code, const std::string& file,
                     std::string message) {
    return Diagnostic{severity, std::move(code), Span{0, 0, 1, 1}, std::move(message), file};
}

} // namespace

LoadResult load_responses_text(const EseaMethod& method, std::string_view json_text,
                               std::string file) {
    LoadResult result;
    auto err = [&](std::string code, std::string message) {
        result.diagnostics.push_back(
            file_diag(Severity::error, std::move(code), file, std::move(message)));
    };

    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded()) {
        err("E-RESP-JSON", "responses file is not valid JSON");
        return result;
    }
    if (!root.is_object()) {
        err("E-RESP-SCHEMA", "top level must be an object");
        return result;
    }

    AccountData data;

    if (!root.contains("account") || !root["account"].is_object()) {
        err("E-RESP-SCHEMA", "missing \"account\" object");
    } else {
        const json& account = root["account"];
        if (!account.contains("id") || !account["id"].is_string()) {
            err("E-RESP-SCHEMA", "account.id must be a string");
        } else {
            data.account_id = account["id"].get<std::string>();
        }
        if (!account.contains("year") || !account["year"].is_number_integer()) {
            err("E-RESP-SCHEMA", "account.year must be an integer");
        } else {
            data.year = account["year"].get<long long>();
        }
    }

    if (!root.contains("surveys") || !root["surveys"].is_array()) {
        err("E-RESP-SCHEMA", "missing \"surveys\" array");
        return result;
    }

    // question id -> owning survey id (ids are method-wide unique)
    std::unordered_map<std::string, std::string> question_owner;
    for (const Survey* survey : method.all_surveys()) {
        for (const Section& section : survey->sections) {
            for (const Question& q : section.questions) {
                question_owner.emplace(q.id, survey->id);
            }
        }
    }

    std::unordered_set<std::string> seen_surveys;
    std::size_t survey_pos = 0;
    for (const json& block_json : root["surveys"]) {
        std::string where = "surveys[" + std::to_string(survey_pos++) + "]";
        if (!block_json.is_object()) {
            err("E-RESP-SCHEMA", where + " must be an object");
            continue;
        }
        SurveyBlock block;
        if (!block_json.contains("survey_id") || !block_json["survey_id"].is_string()) {
            err("E-RESP-SCHEMA", where + ".survey_id must be a string");
            continue;
        }
        block.survey_id = block_json["survey_id"].get<std::string>();
        where += " (survey '" + block.survey_id + "')";
        if (!method.find_survey(block.survey_id)) {
            err("E-UNKNOWN-S", "unknown survey '" + block.survey_id + "'");
            continue;
        }
        if (!seen_surveys.insert(block.survey_id).second) {
            err("E-RESP-SCHEMA", "survey '" + block.survey_id + "' appears more than once");
            continue;
        }
        if (block_json.contains("population")) {
            const json& population = block_json["population"];
            if (!population.is_number_integer() || population.get<long long>() <= 0) {
                err("E-RESP-SCHEMA", where + ".population must be a positive integer");
            } else {
                block.population = population.get<long long>();
            }
        }
        if (!block_json.contains("responses") || !block_json["responses"].is_array()) {
            err("E-RESP-SCHEMA", where + ".responses must be an array");
            continue;
        }
        std::unordered_set<std::string> seen_respondents;
        std::size_t response_pos = 0;
        for (const json& response_json : block_json["responses"]) {
            std::string rwhere = where + ".responses[" + std::to_string(response_pos++) + "]";
            if (!response_json.is_object()) {
                err("E-RESP-SCHEMA", rwhere + " must be an object");
                continue;
            }
            SurveyResponseData response;
            if (!response_json.contains("respondent") ||
                !response_json["respondent"].is_string()) {
                err("E-RESP-SCHEMA", rwhere + ".respondent must be a string");
                continue;
            }
            response.respondent = response_json["respondent"].get<std::string>();
            if (!seen_respondents.insert(response.respondent).second) {
                err("E-DUP-RESP", "respondent '" + response.respondent +
                                      "' answered survey '" + block.survey_id +
                                      "' more than once");
                continue;
            }
            if (!response_json.contains("state") || !response_json["state"].is_string()) {
                err("E-RESP-SCHEMA", rwhere + ".state must be \"complete\" or \"incomplete\"");
                continue;
            }
            std::string state = response_json["state"].get<std::string>();
            if (state == "complete") {
                response.state = ResponseState::complete;
            } else if (state == "incomplete") {
                response.state = ResponseState::incomplete;
            } else {
                err("E-RESP-SCHEMA", rwhere + ".state must be \"complete\" or \"incomplete\"");
                continue;
            }
            if (!response_json.contains("answers") || !response_json["answers"].is_object()) {
                err("E-RESP-SCHEMA", rwhere + ".answers must be an object");
                continue;
            }
            for (const auto& [question_id, answer] : response_json["answers"].items()) {
                auto owner = question_owner.find(question_id);
                if (owner == question_owner.end() || owner->second != block.survey_id) {
                    err("E-UNKNOWN-Q", "answer for unknown question '" + question_id +
                                           "' in survey '" + block.survey_id + "'");
                    continue;
                }
                RawAnswer raw;
                if (answer.is_null()) {
                    raw = std::monostate{};
                } else if (answer.is_boolean()) {
                    raw = answer.get<bool>();
                } else if (answer.is_number()) {
                    raw = answer.get<double>();
                } else if (answer.is_string()) {
                    raw = answer.get<std::string>();
                } else if (answer.is_array()) {
                    std::vector<std::string> items;
                    bool ok = true;
                    for (const json& item : answer) {
                        if (!item.is_string()) {
                            ok = false;
                            break;
                        }
                        items.push_back(item.get<std::string>());
                    }
                    if (!ok) {
                        err("E-RESP-SCHEMA", rwhere + ": answer for '" + question_id +
                                                 "' must be an array of strings");
                        continue;
                    }
                    raw = std::move(items);
                } else {
                    err("E-RESP-SCHEMA", rwhere + ": answer for '" + question_id +
                                             "' has an unsupported JSON type");
                    continue;
                }
                response.answers.emplace(question_id, std::move(raw));
            }
            block.responses.push_back(std::move(response));
        }
        data.surveys.push_back(std::move(block));
    }

    sort_diagnostics(result.diagnostics);
    if (!has_errors(result.diagnostics)) {
        result.data = std::move(data);
    }
    return result;
}

LoadResult load_responses(const EseaMethod& method, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        LoadResult result;
        result.diagnostics.push_back(file_diag(Severity::error, "E-RESP-IO", path.string(),
                                               "cannot open responses file"));
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_responses_text(method, buffer.str(), path.string());
}

ThresholdOutcome check_threshold(const Survey& survey, const SurveyBlock& block) {
    ThresholdOutcome outcome;
    outcome.threshold = survey.min_threshold;
    outcome.population = block.population;
    outcome.complete_responses = static_cast<long long>(
        std::count_if(block.responses.begin(), block.responses.end(),
                      [](const SurveyResponseData& r) { return r.state == ResponseState::complete; }));

    double t = survey.min_threshold;
    if (t <= 0) {
        outcome.passed = true;
        outcome.required = 0;
        outcome.detail = "no minimum";
        return outcome;
    }
    if (t <= 1.0) {
        if (!block.population) {
            outcome.passed = false;
            outcome.error_code = "E-NO-POP";
            outcome.detail = "fractional threshold needs a population";
            return outcome;
        }
        auto required = static_cast<long long>(
            decimal_ceil(t * static_cast<double>(*block.population)));
        outcome.required = required;
        outcome.passed = outcome.complete_responses >= required;
        outcome.detail = std::to_string(outcome.complete_responses) + " of " +
                         std::to_string(required) + " required complete responses (population " +
                         std::to_string(*block.population) + ")";
        return outcome;
    }
    auto required = static_cast<long long>(decimal_ceil(t));
    outcome.required = required;
    outcome.passed = outcome.complete_responses >= required;
    outcome.detail = std::to_string(outcome.complete_responses) + " of " +
                     std::to_string(required) + " required complete responses";
    return outcome;
}

namespace {

// Answer coercion against the indicator datatype; nullopt with *error set
// when the raw value does not fit.
std::optional<Value> coerce_answer(const RawAnswer& raw, const Indicator& indicator,
                                   std::string& error) {
    if (std::holds_alternative<std::monostate>(raw)) return Value::missing();

    auto option_declared = [&](const std::string& text) {
        return std::any_of(indicator.options.begin(), indicator.options.end(),
                           [&](const AnswerOption& o) { return o.text == text; });
    };

    switch (indicator.datatype) {
    case DatatypeKind::text:
        if (const auto* s = std::get_if<std::string>(&raw)) return Value::text(*s);
        error = "expected a text answer";
        return std::nullopt;
    case DatatypeKind::integer: {
        const auto* n = std::get_if<double>(&raw);
        if (!n) {
            error = "expected an integer answer";
            return std::nullopt;
        }
        if (*n != std::trunc(*n)) {
            error = "expected a whole number";
            return std::nullopt;
        }
        return Value::number(*n);
    }
    case DatatypeKind::real:
        if (const auto* n = std::get_if<double>(&raw)) return Value::number(*n);
        error = "expected a number answer";
        return std::nullopt;
    case DatatypeKind::boolean:
        if (const auto* b = std::get_if<bool>(&raw)) return Value::boolean(*b);
        error = "expected true or false";
        return std::nullopt;
    case DatatypeKind::date: {
        const auto* s = std::get_if<std::string>(&raw);
        if (!s) {
            error = "expected a date answer";
            return std::nullopt;
        }
        auto date = Date::parse(*s);
        if (!date) {
            error = "expected a date in YYYY-MM-DD form";
            return std::nullopt;
        }
        return Value::date(*date);
    }
    case DatatypeKind::single_choice: {
        const auto* s = std::get_if<std::string>(&raw);
        if (!s) {
            error = "expected one answer option";
            return std::nullopt;
        }
        if (!option_declared(*s)) {
            error = "'" + *s + "' is not a declared answer option";
            return std::nullopt;
        }
        return Value::choice(*s);
    }
    case DatatypeKind::multiple_choice: {
        const auto* items = std::get_if<std::vector<std::string>>(&raw);
        if (!items) {
            error = "expected a list of answer options";
            return std::nullopt;
        }
        for (const std::string& item : *items) {
            if (!option_declared(item)) {
                error = "'" + item + "' is not a declared answer option";
                return std::nullopt;
            }
        }
        return Value::choice_set(*items);
    }
    }
    error = "unsupported datatype";
    return std::nullopt;
}

struct TopicNode {
    std::size_t index;
    std::vector<std::size_t> children;
};

// Children of each topic plus the root list, in declaration order.
std::pair<std::vector<std::vector<std::size_t>>, std::vector<std::size_t>> topic_tree(
    const EseaMethod& method) {
    std::vector<std::vector<std::size_t>> children(method.topics.size());
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < method.topics.size(); ++i) {
        const auto& parent = method.topics[i].parent;
        if (parent && *parent != i) {
            children[*parent].push_back(i);
        } else {
            roots.push_back(i);
        }
    }
    return {std::move(children), std::move(roots)};
}

ordered_json value_to_json(const Value& v) {
    if (v.is_missing()) return nullptr;
    if (v.is_number()) {
        double d = v.as_number();
        if (d == std::trunc(d) && std::fabs(d) < 9.007199254740992e15) {
            return static_cast<long long>(d);
        }
        return d;
    }
    if (v.is_text()) return v.as_text();
    if (v.is_bool()) return v.as_bool();
    if (v.is_date()) return v.as_date().to_string();
    if (v.is_choice()) return v.as_choice().text;
    ordered_json arr = ordered_json::array();
    for (const std::string& t : v.as_choice_set().texts) arr.push_back(t);
    return arr;
}

const char* value_kind_name(const Value& v) {
    if (v.is_number()) return "number";
    if (v.is_text()) return "text";
    if (v.is_bool()) return "boolean";
    if (v.is_date()) return "date";
    if (v.is_choice()) return "choice";
    if (v.is_choice_set()) return "choice-set";
    return "missing";
}

const char* requirement_status_name(RequirementOutcome::Status s) {
    switch (s) {
    case RequirementOutcome::Status::satisfied: return "true";
    case RequirementOutcome::Status::unsatisfied: return "false";
    case RequirementOutcome::Status::missing: return "missing";
    case RequirementOutcome::Status::non_boolean: return "non-boolean";
    }
    return "?";
}

} // namespace

std::vector<CertificationOutcome> evaluate_certifications(
    const EseaMethod& method, const std::map<std::string, Value>& values,
    std::vector<RuntimeDiag>& diags) {
    std::vector<CertificationOutcome> outcomes;
    for (const CertificationLevel& level : method.certification_levels) {
        CertificationOutcome outcome;
        outcome.id = level.id;
        outcome.name = level.name;
        outcome.colour = level.colour;
        outcome.level = level.level;
        outcome.achieved = true;
        for (std::size_t req_ix : level.requirements) {
            const Indicator& ind = method.indicators[req_ix];
            RequirementOutcome req;
            req.indicator = ind.id;
            auto it = values.find(ind.id);
            const Value v = it == values.end() ? Value::missing() : it->second;
            if (v.is_missing()) {
                req.status = RequirementOutcome::Status::missing;
                outcome.achieved = false;
            } else if (!v.is_bool()) {
                req.status = RequirementOutcome::Status::non_boolean;
                outcome.achieved = false;
                diags.push_back({Severity::error, "E-RT-TYPE",
                                 "certification " + level.id,
                                 "requirement '" + ind.id + "' is not boolean"});
            } else if (v.as_bool()) {
                req.status = RequirementOutcome::Status::satisfied;
            } else {
                req.status = RequirementOutcome::Status::unsatisfied;
                outcome.achieved = false;
            }
            outcome.requirements.push_back(std::move(req));
        }
        outcomes.push_back(std::move(outcome));
    }
    std::stable_sort(outcomes.begin(), outcomes.end(),
                     [](const CertificationOutcome& a, const CertificationOutcome& b) {
                         return a.level < b.level;
                     });
    return outcomes;
}

std::vector<RuleOutcome> run_validation_rules(const EseaMethod& method, EvalContext& ctx) {
    std::vector<RuleOutcome> outcomes;
    for (const ValidationRule& rule : method.validation_rules) {
        RuleOutcome outcome;
        outcome.id = rule.id;
        outcome.name = rule.name;
        outcome.severity = rule.severity;
        outcome.message = rule.message;
        Value condition;
        try {
            condition = evaluate_expression(*rule.condition, ctx);
        } catch (const EvalError& e) {
            ctx.diags.push_back({Severity::error, e.code(), "rule " + rule.id, e.what()});
            outcome.result = RuleOutcome::Result::skipped;
            outcomes.push_back(std::move(outcome));
            continue;
        }
        if (condition.is_missing()) {
            outcome.result = RuleOutcome::Result::skipped;
            ctx.warn("W-RULE-SKIP", "rule " + rule.id,
                     "condition could not be evaluated; rule skipped");
        } else if (!condition.is_bool()) {
            outcome.result = RuleOutcome::Result::skipped;
            ctx.diags.push_back({Severity::error, "E-RT-TYPE", "rule " + rule.id,
                                 "condition must be boolean"});
        } else if (condition.as_bool()) {
            outcome.result = RuleOutcome::Result::passed;
        } else {
            outcome.result = RuleOutcome::Result::violated;
            ctx.diags.push_back({rule.severity == RuleSeverity::error ? Severity::error
                                                                      : Severity::warning,
                                 rule.severity == RuleSeverity::error ? "E-RULE" : "W-RULE",
                                 "rule " + rule.id, rule.message});
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

AccountReport evaluate_account(const EseaMethod& method, const AccountData& data) {
    AccountReport report;
    report.account_id = data.account_id;
    report.year = data.year;
    report.method_name = method.name;
    report.method_version = method.version;

    EvalContext ctx;
    ctx.method = &method;

    std::unordered_map<std::string, const SurveyBlock*> blocks;
    for (const SurveyBlock& block : data.surveys) blocks.emplace(block.survey_id, &block);

    // Indicators linked by questions of surveys whose data is unusable.
    std::set<std::string> failed_survey_indicators;
    std::unordered_map<std::string, std::string> failure_reason;

    for (const Survey* survey : method.all_surveys()) {
        SurveyReportEntry entry;
        entry.survey_id = survey->id;
        entry.name = survey->name;

        static const SurveyBlock empty_block{};
        auto it = blocks.find(survey->id);
        entry.in_file = it != blocks.end();
        const SurveyBlock& block = entry.in_file ? *it->second : empty_block;

        entry.threshold = check_threshold(*survey, block);
        if (entry.threshold.error_code) {
            ctx.diags.push_back({Severity::error, *entry.threshold.error_code,
                                 "survey " + survey->id, entry.threshold.detail});
        }

        std::vector<const SurveyResponseData*> complete;
        for (const SurveyResponseData& r : block.responses) {
            if (r.state == ResponseState::complete) complete.push_back(&r);
        }

        bool usable = entry.threshold.passed;
        if (survey->type == SurveyType::single && complete.size() > 1) {
            ctx.diags.push_back({Severity::error, "E-SINGLE-MULTI", "survey " + survey->id,
                                 "single-response survey received " +
                                     std::to_string(complete.size()) + " complete responses"});
            usable = false;
        }

        std::string reason = entry.threshold.passed
                                 ? "single-response survey answered more than once"
                                 : "survey threshold not met";

        for (const Section& section : survey->sections) {
            for (const Question& q : section.questions) {
                if (!q.indicator) continue;
                const Indicator& ind = method.indicators[*q.indicator];

                if (!usable) {
                    failed_survey_indicators.insert(ind.id);
                    failure_reason.emplace(ind.id, reason);
                    continue;
                }

                if (survey->type == SurveyType::multi) {
                    if (!ctx.multisets.count(ind.id)) ctx.bind_multiset(ind.id, {});
                }

                for (const SurveyResponseData* response : complete) {
                    auto answer_it = response->answers.find(q.id);
                    bool unanswered = answer_it == response->answers.end() ||
                                      std::holds_alternative<std::monostate>(answer_it->second);
                    if (unanswered) {
                        if (q.is_mandatory) {
                            std::string who = survey->is_anonymous()
                                                  ? "a respondent"
                                                  : "respondent '" + response->respondent + "'";
                            ctx.warn("W-MANDATORY", "survey " + survey->id,
                                     who + " left mandatory question '" + q.id + "' unanswered");
                        }
                        continue;
                    }
                    std::string coerce_error;
                    std::optional<Value> value =
                        coerce_answer(answer_it->second, ind, coerce_error);
                    if (!value) {
                        std::string who = survey->is_anonymous()
                                              ? std::string("a respondent")
                                              : "respondent '" + response->respondent + "'";
                        ctx.warn("W-RT-COERCE", "indicator " + ind.id,
                                 "answer to '" + q.id + "' from " + who + " ignored: " +
                                     coerce_error);
                        continue;
                    }
                    if (value->is_missing()) continue;
                    if (survey->type == SurveyType::multi) {
                        ctx.multisets[ind.id].push_back(std::move(*value));
                    } else {
                        if (ctx.scalars.count(ind.id)) {
                            ctx.warn("W-RT-REBIND", "indicator " + ind.id,
                                     "already has a value; answer to '" + q.id + "' ignored");
                            continue;
                        }
                        ctx.bind_scalar(ind.id, std::move(*value));
                    }
                }
            }
        }
        report.surveys.push_back(std::move(entry));
    }

    // Data from failed surveys is dropped; an indicator stays usable when
    // some passing survey bound it.
    for (const std::string& id : failed_survey_indicators) {
        if (ctx.scalars.count(id) || ctx.multisets.count(id)) continue;
        ctx.invalidate(id, failure_reason[id]);
    }

    std::map<std::string, Value> values = evaluate_all(method, ctx);

    for (const Indicator& ind : method.indicators) {
        IndicatorReportEntry entry;
        entry.id = ind.id;
        entry.value = values.at(ind.id);
        if (auto ms = ctx.multisets.find(ind.id); ms != ctx.multisets.end()) {
            entry.response_count = ms->second.size();
        }
        if (entry.value.is_missing()) {
            entry.formatted = "—";
            auto cause = ctx.missing_cause.find(ind.id);
            if (cause != ctx.missing_cause.end()) entry.cause = cause->second;
        } else {
            entry.formatted = format_value(ind, entry.value);
        }
        report.indicators.push_back(std::move(entry));
    }

    report.certifications = evaluate_certifications(method, values, ctx.diags);
    report.validation = run_validation_rules(method, ctx);
    report.diagnostics = std::move(ctx.diags);
    return report;
}

namespace {

struct TextReport {
    const AccountReport& report;
    const EseaMethod& method;
    std::ostringstream out;

    void render() {
        out << "ESEA Account Report\n";
        out << "Account: " << report.account_id << "    Year: " << report.year << "\n";
        out << "Method: " << report.method_name << " v"
            << format_grammar_double(report.method_version) << "\n";

        out << "\nSurveys\n";
        for (const SurveyReportEntry& s : report.surveys) {
            out << "  " << s.survey_id << ": " << s.threshold.complete_responses
                << " complete response" << (s.threshold.complete_responses == 1 ? "" : "s");
            if (s.threshold.required && *s.threshold.required > 0) {
                out << " (" << *s.threshold.required << " required)";
            }
            out << " — " << (s.threshold.passed ? "PASS" : "FAIL");
            if (!s.threshold.passed) out << " (" << s.threshold.detail << ")";
            out << "\n";
        }

        out << "\nIndicators\n";
        auto [children, roots] = topic_tree(method);
        for (std::size_t root : roots) render_topic(root, children, 1);

        if (!report.certifications.empty()) {
            out << "\nCertifications\n";
            for (const CertificationOutcome& c : report.certifications) {
                out << "  " << format_number(c.level) << " " << c.name << " (" << c.colour
                    << "): " << (c.achieved ? "ACHIEVED" : "not achieved") << "\n";
                for (const RequirementOutcome& r : c.requirements) {
                    out << "    [" << r.indicator << "] " << requirement_status_name(r.status)
                        << "\n";
                }
            }
        }

        out << "\nValidation\n";
        for (const RuleOutcome& r : report.validation) {
            out << "  " << r.id << ": ";
            switch (r.result) {
            case RuleOutcome::Result::passed: out << "ok"; break;
            case RuleOutcome::Result::violated:
                out << to_string(r.severity) << " — " << r.message;
                break;
            case RuleOutcome::Result::skipped: out << "skipped"; break;
            }
            out << "\n";
        }

        if (!report.diagnostics.empty()) {
            out << "\nRuntime notes\n";
            for (const RuntimeDiag& d : report.diagnostics) {
                out << "  " << to_string(d.severity) << "[" << d.code << "] " << d.context
                    << ": " << d.message << "\n";
            }
        }
    }

    void render_topic(std::size_t topic_ix, const std::vector<std::vector<std::size_t>>& children,
                      int depth) {
        std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
        out << indent << method.topics[topic_ix].name << "\n";
        for (std::size_t i = 0; i < method.indicators.size(); ++i) {
            if (method.indicators[i].topic != topic_ix) continue;
            const IndicatorReportEntry& entry = report.indicators[i];
            out << indent << "  " << method.indicators[i].name << ": " << entry.formatted;
            if (entry.value.is_missing() && entry.cause) out << " (" << *entry.cause << ")";
            if (entry.response_count) out << " [" << *entry.response_count << " responses]";
            out << "\n";
        }
        for (std::size_t child : children[topic_ix]) render_topic(child, children, depth + 1);
    }
};

} // namespace

std::string render_report(const AccountReport& report, const EseaMethod& method,
                          ReportFormat format) {
    if (format == ReportFormat::text) {
        TextReport renderer{report, method, {}};
        renderer.render();
        return renderer.out.str();
    }

    ordered_json j;
    j["account"] = {{"id", report.account_id}, {"year", report.year}};
    j["method"] = {{"name", report.method_name}, {"version", report.method_version}};

    j["surveys"] = ordered_json::array();
    for (const SurveyReportEntry& s : report.surveys) {
        ordered_json sj;
        sj["survey_id"] = s.survey_id;
        sj["name"] = s.name;
        sj["complete_responses"] = s.threshold.complete_responses;
        sj["population"] =
            s.threshold.population ? ordered_json(*s.threshold.population) : ordered_json(nullptr);
        sj["min_threshold"] = s.threshold.threshold;
        sj["required"] =
            s.threshold.required ? ordered_json(*s.threshold.required) : ordered_json(nullptr);
        sj["passed"] = s.threshold.passed;
        sj["in_file"] = s.in_file;
        j["surveys"].push_back(std::move(sj));
    }

    j["indicators"] = ordered_json::array();
    for (std::size_t i = 0; i < report.indicators.size(); ++i) {
        const IndicatorReportEntry& entry = report.indicators[i];
        const Indicator& ind = method.indicators[i];
        ordered_json ij;
        ij["id"] = entry.id;
        ij["name"] = ind.name;
        ij["topic"] = method.topics[ind.topic].id;
        ij["kind"] = ind.is_direct() ? "direct" : "indirect";
        ij["value"] = value_to_json(entry.value);
        ij["value_kind"] = value_kind_name(entry.value);
        if (!entry.value.is_missing()) ij["formatted"] = entry.formatted;
        if (entry.cause) ij["cause"] = *entry.cause;
        if (entry.response_count) ij["responses"] = *entry.response_count;
        j["indicators"].push_back(std::move(ij));
    }

    j["certifications"] = ordered_json::array();
    for (const CertificationOutcome& c : report.certifications) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["name"] = c.name;
        cj["level"] = c.level;
        cj["colour"] = c.colour;
        cj["achieved"] = c.achieved;
        cj["requirements"] = ordered_json::array();
        for (const RequirementOutcome& r : c.requirements) {
            cj["requirements"].push_back(
                {{"indicator", r.indicator}, {"status", requirement_status_name(r.status)}});
        }
        j["certifications"].push_back(std::move(cj));
    }

    j["validation"] = ordered_json::array();
    for (const RuleOutcome& r : report.validation) {
        ordered_json rj;
        rj["rule"] = r.id;
        rj["name"] = r.name;
        rj["severity"] = to_string(r.severity);
        rj["result"] = r.result == RuleOutcome::Result::passed    ? "passed"
                       : r.result == RuleOutcome::Result::violated ? "violated"
                                                                   : "skipped";
        rj["message"] = r.message;
        j["validation"].push_back(std::move(rj));
    }

    j["diagnostics"] = ordered_json::array();
    for (const RuntimeDiag& d : report.diagnostics) {
        j["diagnostics"].push_back({{"severity", to_string(d.severity)},
                                    {"code", d.code},
                                    {"context", d.context},
                                    {"message", d.message}});
    }

    return j.dump(2) + "\n";
}

} // namespace esea
