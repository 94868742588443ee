#pragma once

#include <optional>
#include <string_view>

namespace esea {

enum class DatatypeKind {
    text,
    integer,
    real, // grammar keyword "double"
    date,
    boolean,
    single_choice,
    multiple_choice,
};

enum class UiComponent { field, line, text_box, check_box, drop_down, radio_button };

enum class SurveyType { multi, single };

enum class RuleSeverity { warning, error };

// Indirect indicator purpose. Not part of the base syntax; set via the
// optional "Purpose:" keyword and defaulting to performance.
enum class Purpose { performance, score };

enum class UnaryFn { abs, trunc }; // "abs" | "int"

enum class BinaryFn { round_up, round_down, round, count_if };

enum class StatFn { min, max, sum, avg, mode, median };

const char* to_string(DatatypeKind k);     // grammar spelling ("double", "singleChoice", ...)
const char* to_string(UiComponent c);      // grammar spelling ("textBox", ...)
const char* to_string(SurveyType t);
const char* to_string(RuleSeverity s);
const char* to_string(Purpose p);
const char* to_string(UnaryFn f);
const char* to_string(BinaryFn f);
const char* to_string(StatFn f);

std::optional<UiComponent> ui_component_from(std::string_view word);
std::optional<StatFn> stat_fn_from(std::string_view word);
std::optional<UnaryFn> unary_fn_from(std::string_view word);
std::optional<BinaryFn> binary_fn_from(std::string_view word);

} // namespace esea
