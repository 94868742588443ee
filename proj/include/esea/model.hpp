#pragma once

#include "esea/ast.hpp"
#include "esea/enums.hpp"
#include "esea/value.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

// Resolved, validated method model. All cross-references are indices into
// the owning method's vectors; instances are treated as immutable once
// built and may be shared freely between threads.
namespace esea {

struct Topic {
    std::string id;
    std::string name;
    std::string description;
    std::optional<std::size_t> parent; // index into EseaMethod::topics
};

struct AnswerOption {
    long long order = 0;
    std::string text;
};

struct DirectKind {
    ExprPtr condition; // nullable; must evaluate to boolean
};

struct IndirectKind {
    StmtPtr formula;
    Purpose purpose = Purpose::performance;
};

struct Indicator {
    std::string id;
    std::string name;
    std::string description;
    std::optional<std::string> pre_unit;
    std::optional<std::string> post_unit;
    std::size_t topic = 0; // index into EseaMethod::topics
    DatatypeKind datatype = DatatypeKind::text;
    std::vector<AnswerOption> options; // present iff choice datatype
    std::variant<DirectKind, IndirectKind> kind;

    bool is_direct() const { return std::holds_alternative<DirectKind>(kind); }
    const DirectKind& direct() const { return std::get<DirectKind>(kind); }
    const IndirectKind& indirect() const { return std::get<IndirectKind>(kind); }
    bool has_choice_datatype() const {
        return datatype == DatatypeKind::single_choice || datatype == DatatypeKind::multiple_choice;
    }
};

struct TextFragment {
    std::string text;
    long long order = 0;
};

struct Question {
    std::string id;
    std::string name;
    std::string description;
    bool is_mandatory = false;
    UiComponent ui = UiComponent::field;
    long long order = 0;
    std::optional<std::size_t> indicator; // index into EseaMethod::indicators; Direct only
    std::string instruction;
};

struct Section {
    std::string id;
    std::string title;
    long long order = 0;
    std::vector<Question> questions;
    std::vector<TextFragment> fragments;
};

struct Survey {
    std::string id;
    std::string name;
    std::string description;
    SurveyType type = SurveyType::single;
    std::optional<std::string> welcome_txt;
    std::optional<std::string> closing_txt;
    double min_threshold = 0;
    std::optional<bool> anonymous;
    std::vector<Section> sections;

    bool is_anonymous() const { return anonymous.value_or(false); }
};

struct CertificationLevel {
    std::string id;
    std::string name;
    std::string description;
    double level = 0;
    std::string colour;
    std::vector<std::size_t> requirements; // indices into EseaMethod::indicators
};

struct ValidationRule {
    std::string id;
    std::string name;
    RuleSeverity severity = RuleSeverity::error;
    ExprPtr condition;
    std::string message;
};

struct EseaMethod {
    std::string name;
    double version = 0;
    bool is_public = false;
    std::string description;
    std::vector<Topic> topics;
    std::vector<Indicator> indicators;
    std::vector<Survey> surveys; // ordinary surveys, declaration order
    std::vector<CertificationLevel> certification_levels;
    std::vector<ValidationRule> validation_rules;
    std::optional<Survey> registration_survey;

    // Rebuilds the id lookup tables; called once after construction.
    void finalize();

    const Indicator* find_indicator(std::string_view id) const;
    std::optional<std::size_t> indicator_index_of(std::string_view id) const;
    const Survey* find_survey(std::string_view id) const; // includes the registration survey

    // Ordinary surveys followed by the registration survey, if any.
    std::vector<const Survey*> all_surveys() const;

private:
    std::unordered_map<std::string, std::size_t> indicator_index_;
};

// Renders a non-missing value with the indicator's units:
// pre_unit + " " + value + " " + post_unit, absent units omitted. Numbers
// use format_number; choice sets are listed in declared option order.
std::string format_value(const Indicator& indicator, const Value& value);

} // namespace esea
