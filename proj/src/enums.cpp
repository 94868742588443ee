#include "esea/enums.hpp"

namespace esea {

const char* to_string(DatatypeKind k) {
    switch (k) {
    case DatatypeKind::text: return "text";
    case DatatypeKind::integer: return "integer";
    case DatatypeKind::real: return "double";
    case DatatypeKind::date: return "date";
    case DatatypeKind::boolean: return "boolean";
    case DatatypeKind::single_choice: return "singleChoice";
    case DatatypeKind::multiple_choice: return "multipleChoice";
    }
    return "?";
}

const char* to_string(UiComponent c) {
    switch (c) {
    case UiComponent::field: return "field";
    case UiComponent::line: return "line";
    case UiComponent::text_box: return "textBox";
    case UiComponent::check_box: return "checkBox";
    case UiComponent::drop_down: return "dropDown";
    case UiComponent::radio_button: return "radioButton";
    }
    return "?";
}

const char* to_string(SurveyType t) {
    return t == SurveyType::multi ? "multi" : "single";
}

const char* to_string(RuleSeverity s) {
    return s == RuleSeverity::warning ? "warning" : "error";
}

const char* to_string(Purpose p) {
    return p == Purpose::performance ? "performance" : "score";
}

const char* to_string(UnaryFn f) {
    return f == UnaryFn::abs ? "abs" : "int";
}

const char* to_string(BinaryFn f) {
    switch (f) {
    case BinaryFn::round_up: return "roundUp";
    case BinaryFn::round_down: return "roundDown";
    case BinaryFn::round: return "round";
    case BinaryFn::count_if: return "countIf";
    }
    return "?";
}

const char* to_string(StatFn f) {
    switch (f) {
    case StatFn::min: return "min";
    case StatFn::max: return "max";
    case StatFn::sum: return "sum";
    case StatFn::avg: return "avg";
    case StatFn::mode: return "mode";
    case StatFn::median: return "median";
    }
    return "?";
}

std::optional<UiComponent> ui_component_from(std::string_view word) {
    if (word == "field") return UiComponent::field;
    if (word == "line") return UiComponent::line;
    if (word == "textBox") return UiComponent::text_box;
    if (word == "checkBox") return UiComponent::check_box;
    if (word == "dropDown") return UiComponent::drop_down;
    if (word == "radioButton") return UiComponent::radio_button;
    return std::nullopt;
}

std::optional<StatFn> stat_fn_from(std::string_view word) {
    if (word == "min") return StatFn::min;
    if (word == "max") return StatFn::max;
    if (word == "sum") return StatFn::sum;
    if (word == "avg") return StatFn::avg;
    if (word == "mode") return StatFn::mode;
    if (word == "median") return StatFn::median;
    return std::nullopt;
}

std::optional<UnaryFn> unary_fn_from(std::string_view word) {
    if (word == "abs") return UnaryFn::abs;
    if (word == "int") return UnaryFn::trunc;
    return std::nullopt;
}

std::optional<BinaryFn> binary_fn_from(std::string_view word) {
    if (word == "roundUp") return BinaryFn::round_up;
    if (word == "roundDown") return BinaryFn::round_down;
    if (word == "round") return BinaryFn::round;
    if (word == "countIf") return BinaryFn::count_if;
    return std::nullopt;
}

} // namespace esea
