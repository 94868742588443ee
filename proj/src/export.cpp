#include "esea/export.hpp"

#include "esea/printer.hpp"

#include <json.hpp>

namespace esea {

using ordered_json = nlohmann::ordered_json;

std::string export_model_json(const EseaMethod& method) {
    ordered_json j;
    j["name"] = method.name;
    j["version"] = method.version;
    j["is_public"] = method.is_public;
    j["description"] = method.description;

    j["topics"] = ordered_json::array();
    for (const Topic& t : method.topics) {
        ordered_json tj;
        tj["id"] = t.id;
        tj["name"] = t.name;
        tj["description"] = t.description;
        if (t.parent) tj["parent"] = method.topics[*t.parent].id;
        j["topics"].push_back(std::move(tj));
    }

    j["indicators"] = ordered_json::array();
    for (const Indicator& ind : method.indicators) {
        ordered_json ij;
        ij["id"] = ind.id;
        ij["name"] = ind.name;
        ij["description"] = ind.description;
        if (ind.pre_unit) ij["pre_unit"] = *ind.pre_unit;
        if (ind.post_unit) ij["post_unit"] = *ind.post_unit;
        ij["topic"] = method.topics[ind.topic].id;
        ij["datatype"] = to_string(ind.datatype);
        if (!ind.options.empty()) {
            ij["answer_options"] = ordered_json::array();
            for (const AnswerOption& option : ind.options) {
                ij["answer_options"].push_back({{"order", option.order}, {"text", option.text}});
            }
        }
        if (ind.is_direct()) {
            ij["kind"] = "direct";
            if (ind.direct().condition) {
                ij["condition"] = print_expression(*ind.direct().condition);
            }
        } else {
            ij["kind"] = "indirect";
            ij["formula"] = print_statement(*ind.indirect().formula);
            ij["purpose"] = to_string(ind.indirect().purpose);
        }
        j["indicators"].push_back(std::move(ij));
    }

    auto survey_json = [&](const Survey& s) {
        ordered_json sj;
        sj["id"] = s.id;
        sj["name"] = s.name;
        sj["description"] = s.description;
        sj["survey_type"] = to_string(s.type);
        if (s.welcome_txt) sj["welcome_txt"] = *s.welcome_txt;
        if (s.closing_txt) sj["closing_txt"] = *s.closing_txt;
        sj["min_threshold"] = s.min_threshold;
        if (s.anonymous) sj["anonymous"] = *s.anonymous;
        sj["sections"] = ordered_json::array();
        for (const Section& section : s.sections) {
            ordered_json secj;
            secj["id"] = section.id;
            secj["title"] = section.title;
            secj["order"] = section.order;
            secj["questions"] = ordered_json::array();
            for (const Question& q : section.questions) {
                ordered_json qj;
                qj["id"] = q.id;
                qj["name"] = q.name;
                qj["description"] = q.description;
                qj["mandatory"] = q.is_mandatory;
                qj["ui_component"] = to_string(q.ui);
                qj["order"] = q.order;
                if (q.indicator) qj["indicator"] = method.indicators[*q.indicator].id;
                qj["instruction"] = q.instruction;
                secj["questions"].push_back(std::move(qj));
            }
            if (!section.fragments.empty()) {
                secj["text_fragments"] = ordered_json::array();
                for (const TextFragment& f : section.fragments) {
                    secj["text_fragments"].push_back({{"text", f.text}, {"order", f.order}});
                }
            }
            sj["sections"].push_back(std::move(secj));
        }
        return sj;
    };

    j["surveys"] = ordered_json::array();
    for (const Survey& s : method.surveys) j["surveys"].push_back(survey_json(s));
    if (method.registration_survey) {
        j["registration_survey"] = survey_json(*method.registration_survey);
    }

    j["certification_levels"] = ordered_json::array();
    for (const CertificationLevel& c : method.certification_levels) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["name"] = c.name;
        cj["description"] = c.description;
        cj["level"] = c.level;
        cj["colour"] = c.colour;
        cj["requirements"] = ordered_json::array();
        for (std::size_t req : c.requirements) {
            cj["requirements"].push_back(method.indicators[req].id);
        }
        j["certification_levels"].push_back(std::move(cj));
    }

    j["validation_rules"] = ordered_json::array();
    for (const ValidationRule& r : method.validation_rules) {
        ordered_json rj;
        rj["id"] = r.id;
        rj["name"] = r.name;
        rj["rule_type"] = to_string(r.severity);
        rj["condition"] = print_expression(*r.condition);
        rj["message"] = r.message;
        j["validation_rules"].push_back(std::move(rj));
    }

    return j.dump(2) + "\n";
}

} // namespace esea
