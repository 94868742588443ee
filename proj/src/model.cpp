#include "esea/model.hpp"

#include <algorithm>

namespace esea {

void EseaMethod::finalize() {
    indicator_index_.clear();
    for (std::size_t i = 0; i < indicators.size(); ++i) {
        indicator_index_.emplace(indicators[i].id, i);
    }
}

const Indicator* EseaMethod::find_indicator(std::string_view id) const {
    auto it = indicator_index_.find(std::string(id));
    return it == indicator_index_.end() ? nullptr : &indicators[it->second];
}

std::optional<std::size_t> EseaMethod::indicator_index_of(std::string_view id) const {
    auto it = indicator_index_.find(std::string(id));
    if (it == indicator_index_.end()) return std::nullopt;
    return it->second;
}

const Survey* EseaMethod::find_survey(std::string_view id) const {
    for (const Survey& s : surveys) {
        if (s.id == id) return &s;
    }
    if (registration_survey && registration_survey->id == id) return &*registration_survey;
    return nullptr;
}

std::vector<const Survey*> EseaMethod::all_surveys() const {
    std::vector<const Survey*> out;
    out.reserve(surveys.size() + 1);
    for (const Survey& s : surveys) out.push_back(&s);
    if (registration_survey) out.push_back(&*registration_survey);
    return out;
}

namespace {

std::string render_plain(const Indicator& indicator, const Value& value) {
    if (value.is_number()) return format_number(value.as_number());
    if (value.is_text()) return value.as_text();
    if (value.is_bool()) return value.as_bool() ? "true" : "false";
    if (value.is_date()) return value.as_date().to_string();
    if (value.is_choice()) return value.as_choice().text;
    if (value.is_choice_set()) {
        // List picked options in the indicator's declared option order.
        const ChoiceSet& set = value.as_choice_set();
        std::string out;
        for (const AnswerOption& option : indicator.options) {
            if (!set.contains(option.text)) continue;
            if (!out.empty()) out += ", ";
            out += option.text;
        }
        if (out.empty()) {
            for (const std::string& t : set.texts) {
                if (!out.empty()) out += ", ";
                out += t;
            }
        }
        return out;
    }
    return "";
}

} // namespace

std::string format_value(const Indicator& indicator, const Value& value) {
    std::string rendered = render_plain(indicator, value);
    std::string out;
    if (indicator.pre_unit) out += *indicator.pre_unit + " ";
    out += rendered;
    if (indicator.post_unit) out += " " + *indicator.post_unit;
    return out;
}

} // namespace esea
