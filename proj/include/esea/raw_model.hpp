#pragma once

#include "esea/ast.hpp"
#include "esea/diagnostics.hpp"
#include "esea/enums.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

// Parse-stage model: same shape as the resolved method, but every
// cross-reference is still an identifier with its source span.
namespace esea::raw {

struct Ref {
    std::string name;
    Span span;
};

struct Topic {
    std::string id;
    Span id_span;
    std::string name;
    std::string description;
    std::optional<Ref> parent;
};

struct AnswerOption {
    long long order = 0;
    std::string text;
    Span span;
};

struct Datatype {
    DatatypeKind kind = DatatypeKind::text;
    std::vector<AnswerOption> options; // choice datatypes only
    Span span;
};

struct DirectKind {
    ExprPtr condition; // nullable
};

struct IndirectKind {
    StmtPtr formula;
    Purpose purpose = Purpose::performance;
    bool purpose_stated = false;
};

struct Indicator {
    std::string id;
    Span id_span;
    std::string name;
    std::string description;
    std::optional<std::string> pre_unit;
    std::optional<std::string> post_unit;
    Ref topic;
    std::variant<DirectKind, IndirectKind> kind;
    Datatype datatype;
};

struct TextFragment {
    std::string text;
    long long order = 0;
    Span span;
};

struct Question {
    std::string id;
    Span id_span;
    std::string name;
    std::string description;
    bool is_mandatory = false;
    UiComponent ui = UiComponent::field;
    long long order = 0;
    std::optional<Ref> indicator;
    std::string instruction;
};

struct Section {
    std::string id;
    Span id_span;
    std::string title;
    long long order = 0;
    std::vector<Question> questions;
    std::vector<TextFragment> fragments;
};

struct Survey {
    std::string id;
    Span id_span;
    std::string name;
    std::string description;
    SurveyType type = SurveyType::single;
    std::optional<std::string> welcome_txt;
    std::optional<std::string> closing_txt;
    double min_threshold = 0;
    std::optional<bool> anonymous;
    std::vector<Section> sections;
};

struct CertificationLevel {
    std::string id;
    Span id_span;
    std::string name;
    std::string description;
    double level = 0;
    std::string colour;
    std::vector<Ref> requirements;
};

struct ValidationRule {
    std::string id;
    Span id_span;
    std::string name;
    RuleSeverity rule_type = RuleSeverity::error;
    ExprPtr condition;
    std::string message;
};

struct Method {
    std::string name;
    double version = 0;
    bool is_public = false;
    std::string description;
    std::vector<Topic> topics;
    std::vector<Indicator> indicators;
    std::vector<Survey> surveys;
    std::vector<CertificationLevel> certification_levels;
    std::vector<ValidationRule> validation_rules;
    std::optional<Survey> registration_survey;
};

// Deep equality ignoring spans; this is the identity the
// parse/pretty-print round trip preserves.
bool structurally_equal(const Method& a, const Method& b);

} // namespace esea::raw
