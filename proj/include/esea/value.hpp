#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace esea {

// Calendar date, ISO-8601 "YYYY-MM-DD" text form.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    static std::optional<Date> parse(std::string_view text);
    std::string to_string() const;
};

// Single-choice answer: the text of one declared answer option.
struct Choice {
    std::string text;
    bool operator==(const Choice&) const = default;
};

// Multiple-choice answer: option texts, kept sorted and deduplicated.
struct ChoiceSet {
    std::vector<std::string> texts;

    static ChoiceSet of(std::vector<std::string> texts);
    bool contains(std::string_view t) const;
    bool operator==(const ChoiceSet&) const = default;
};

// Runtime carrier for indicator and answer values.
class Value {
public:
    struct Missing {
        bool operator==(const Missing&) const = default;
    };

    using Data = std::variant<Missing, double, std::string, bool, Date, Choice, ChoiceSet>;

    Value() : data_(Missing{}) {}

    static Value missing() { return Value(); }
    static Value number(double v) { return Value(Data(v)); }
    static Value text(std::string v) { return Value(Data(std::move(v))); }
    static Value boolean(bool v) { return Value(Data(v)); }
    static Value date(Date v) { return Value(Data(v)); }
    static Value choice(std::string option) { return Value(Data(Choice{std::move(option)})); }
    static Value choice_set(std::vector<std::string> options) {
        return Value(Data(ChoiceSet::of(std::move(options))));
    }

    bool is_missing() const { return std::holds_alternative<Missing>(data_); }
    bool is_number() const { return std::holds_alternative<double>(data_); }
    bool is_text() const { return std::holds_alternative<std::string>(data_); }
    bool is_bool() const { return std::holds_alternative<bool>(data_); }
    bool is_date() const { return std::holds_alternative<Date>(data_); }
    bool is_choice() const { return std::holds_alternative<Choice>(data_); }
    bool is_choice_set() const { return std::holds_alternative<ChoiceSet>(data_); }

    double as_number() const { return std::get<double>(data_); }
    const std::string& as_text() const { return std::get<std::string>(data_); }
    bool as_bool() const { return std::get<bool>(data_); }
    const Date& as_date() const { return std::get<Date>(data_); }
    const Choice& as_choice() const { return std::get<Choice>(data_); }
    const ChoiceSet& as_choice_set() const { return std::get<ChoiceSet>(data_); }

    const Data& data() const { return data_; }

    // Structural equality. Numbers compare with number_equal.
    bool operator==(const Value& other) const;

private:
    explicit Value(Data d) : data_(std::move(d)) {}
    Data data_;
};

// Tolerance used by the "=", "==" and "<>" operators on numbers.
inline constexpr double kNumberEqTolerance = 1e-9;

bool number_equal(double a, double b);

// Decimal-intent rounding helpers. The scaled value is nudged by a few ulp
// before ceil/floor/round so that doubles holding decimal literals land on
// the intended side of the boundary (0.1 + 0.2 behaves as 0.3).
double decimal_ceil(double x);
double decimal_floor(double x);
double round_half_away(double x, int places);
double ceil_at_places(double x, int places);
double floor_at_places(double x, int places);

// Number rendering used by reports: two decimal places, whole values
// without a fractional part ("12.50", "600", "0.90").
std::string format_number(double v);

// Shortest non-scientific rendering that the grammar's DOUBLE terminal
// accepts (always keeps a fractional part: "2.0", "0.5").
std::string format_grammar_double(double v);

// Integer rendering without an exponent ("42").
std::string format_grammar_int(double v);

} // namespace esea
