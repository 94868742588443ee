#pragma once

#include "esea/diagnostics.hpp"
#include "esea/eval.hpp"
#include "esea/model.hpp"
#include "esea/value.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace esea {

enum class ResponseState { complete, incomplete };

// Raw answer as it appears in the responses file; coercion into a typed
// Value happens against the indicator's datatype during evaluation.
using RawAnswer = std::variant<std::monostate, bool, double, std::string, std::vector<std::string>>;

struct SurveyResponseData {
    std::string respondent;
    ResponseState state = ResponseState::incomplete;
    std::map<std::string, RawAnswer> answers; // question id -> raw answer
};

struct SurveyBlock {
    std::string survey_id;
    std::optional<long long> population;
    std::vector<SurveyResponseData> responses;
};

struct AccountData {
    std::string account_id;
    long long year = 0;
    std::vector<SurveyBlock> surveys;
};

struct LoadResult {
    std::optional<AccountData> data; // set only when there are no errors
    std::vector<Diagnostic> diagnostics;
};

// Reads and structurally validates a responses file. Unknown survey or
// question ids are E-UNKNOWN-S / E-UNKNOWN-Q, a respondent answering the
// same survey twice is E-DUP-RESP, malformed JSON is E-RESP-JSON and any
// other schema violation E-RESP-SCHEMA.
LoadResult load_responses(const EseaMethod& method, const std::filesystem::path& path);
LoadResult load_responses_text(const EseaMethod& method, std::string_view json_text,
                               std::string file = "<responses>");

struct ThresholdOutcome {
    bool passed = false;
    long long complete_responses = 0;
    std::optional<long long> population;
    double threshold = 0;
    std::optional<long long> required; // resolved response count demanded
    std::string detail;
    std::optional<std::string> error_code; // E-NO-POP
};

// MinThreshold semantics: 0 always passes; 0 < t <= 1 is a fraction of the
// declared population (requires ceil(t * population) complete responses);
// t > 1 is an absolute response count.
ThresholdOutcome check_threshold(const Survey& survey, const SurveyBlock& block);

struct SurveyReportEntry {
    std::string survey_id;
    std::string name;
    ThresholdOutcome threshold;
    bool in_file = false;
};

struct IndicatorReportEntry {
    std::string id;
    Value value;
    std::string formatted;                 // units applied; "—" when missing
    std::optional<std::string> cause;      // why the value is missing
    std::optional<std::size_t> response_count; // multi-response direct indicators
};

struct RequirementOutcome {
    std::string indicator;
    enum class Status { satisfied, unsatisfied, missing, non_boolean } status =
        Status::missing;
};

struct CertificationOutcome {
    std::string id;
    std::string name;
    std::string colour;
    double level = 0;
    bool achieved = false;
    std::vector<RequirementOutcome> requirements;
};

struct RuleOutcome {
    std::string id;
    std::string name;
    RuleSeverity severity = RuleSeverity::error;
    enum class Result { passed, violated, skipped } result = Result::passed;
    std::string message;
};

struct AccountReport {
    std::string account_id;
    long long year = 0;
    std::string method_name;
    double method_version = 0;
    std::vector<SurveyReportEntry> surveys;        // method declaration order
    std::vector<IndicatorReportEntry> indicators;  // method declaration order
    std::vector<CertificationOutcome> certifications; // sorted by level number
    std::vector<RuleOutcome> validation;
    std::vector<RuntimeDiag> diagnostics; // emission order
};

// Binds answers to direct indicators, enforces thresholds and the
// single-response rule, evaluates every indicator, decides certifications
// and runs the validation rules. Failures surface as diagnostics inside
// the report; evaluation always completes.
AccountReport evaluate_account(const EseaMethod& method, const AccountData& data);

// A level is achieved iff every requirement value is boolean true.
// Outcomes are sorted by level number (declaration order on ties).
std::vector<CertificationOutcome> evaluate_certifications(
    const EseaMethod& method, const std::map<std::string, Value>& values,
    std::vector<RuntimeDiag>& diags);

// Evaluates each rule's condition over the account bindings: false emits a
// diagnostic at the rule's severity, Missing logs W-RULE-SKIP, true stays
// silent.
std::vector<RuleOutcome> run_validation_rules(const EseaMethod& method, EvalContext& ctx);

enum class ReportFormat { text, json };

// Deterministic bytes for identical inputs. The text format groups
// indicators under the topic tree; json is the full structured report.
std::string render_report(const AccountReport& report, const EseaMethod& method,
                          ReportFormat format);

} // namespace esea
