#include "esea/raw_model.hpp"

#include <algorithm>

namespace esea::raw {

namespace {

bool eq(const Topic& a, const Topic& b);
bool eq(const AnswerOption& a, const AnswerOption& b);
bool eq(const Indicator& a, const Indicator& b);
bool eq(const TextFragment& a, const TextFragment& b);
bool eq(const Question& a, const Question& b);
bool eq(const Section& a, const Section& b);
bool eq(const Survey& a, const Survey& b);
bool eq(const CertificationLevel& a, const CertificationLevel& b);
bool eq(const ValidationRule& a, const ValidationRule& b);

bool eq(const Ref& a, const Ref& b) {
    return a.name == b.name;
}

bool eq(const std::optional<Ref>& a, const std::optional<Ref>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || eq(*a, *b);
}

bool eq(const Topic& a, const Topic& b) {
    return a.id == b.id && a.name == b.name && a.description == b.description &&
           eq(a.parent, b.parent);
}

bool eq(const AnswerOption& a, const AnswerOption& b) {
    return a.order == b.order && a.text == b.text;
}

bool eq(const Datatype& a, const Datatype& b) {
    return a.kind == b.kind && std::equal(a.options.begin(), a.options.end(), b.options.begin(),
                                          b.options.end(),
                                          [](const auto& x, const auto& y) { return eq(x, y); });
}

bool eq(const Indicator& a, const Indicator& b) {
    if (a.id != b.id || a.name != b.name || a.description != b.description ||
        a.pre_unit != b.pre_unit || a.post_unit != b.post_unit || !eq(a.topic, b.topic) ||
        !eq(a.datatype, b.datatype)) {
        return false;
    }
    if (a.kind.index() != b.kind.index()) return false;
    if (const auto* da = std::get_if<DirectKind>(&a.kind)) {
        const auto& db = std::get<DirectKind>(b.kind);
        return structurally_equal(da->condition, db.condition);
    }
    const auto& ia = std::get<IndirectKind>(a.kind);
    const auto& ib = std::get<IndirectKind>(b.kind);
    return ia.purpose == ib.purpose && ia.purpose_stated == ib.purpose_stated &&
           structurally_equal(ia.formula, ib.formula);
}

bool eq(const TextFragment& a, const TextFragment& b) {
    return a.text == b.text && a.order == b.order;
}

bool eq(const Question& a, const Question& b) {
    return a.id == b.id && a.name == b.name && a.description == b.description &&
           a.is_mandatory == b.is_mandatory && a.ui == b.ui && a.order == b.order &&
           eq(a.indicator, b.indicator) && a.instruction == b.instruction;
}

template <typename T>
bool list_eq(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!eq(a[i], b[i])) return false;
    }
    return true;
}

bool eq(const Section& a, const Section& b) {
    return a.id == b.id && a.title == b.title && a.order == b.order &&
           list_eq(a.questions, b.questions) && list_eq(a.fragments, b.fragments);
}

bool eq(const Survey& a, const Survey& b) {
    return a.id == b.id && a.name == b.name && a.description == b.description &&
           a.type == b.type && a.welcome_txt == b.welcome_txt && a.closing_txt == b.closing_txt &&
           a.min_threshold == b.min_threshold && a.anonymous == b.anonymous &&
           list_eq(a.sections, b.sections);
}

bool eq(const CertificationLevel& a, const CertificationLevel& b) {
    return a.id == b.id && a.name == b.name && a.description == b.description &&
           a.level == b.level && a.colour == b.colour && list_eq(a.requirements, b.requirements);
}

bool eq(const ValidationRule& a, const ValidationRule& b) {
    return a.id == b.id && a.name == b.name && a.rule_type == b.rule_type &&
           a.message == b.message && structurally_equal(a.condition, b.condition);
}

} // namespace

bool structurally_equal(const Method& a, const Method& b) {
    if (a.name != b.name || a.version != b.version || a.is_public != b.is_public ||
        a.description != b.description) {
        return false;
    }
    if (a.registration_survey.has_value() != b.registration_survey.has_value()) return false;
    if (a.registration_survey && !eq(*a.registration_survey, *b.registration_survey)) {
        return false;
    }
    return list_eq(a.topics, b.topics) && list_eq(a.indicators, b.indicators) &&
           list_eq(a.surveys, b.surveys) &&
           list_eq(a.certification_levels, b.certification_levels) &&
           list_eq(a.validation_rules, b.validation_rules);
}

} // namespace esea::raw
