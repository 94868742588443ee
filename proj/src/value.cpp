#include "esea/value.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace esea {

std::optional<Date> Date::parse(std::string_view text) {
    // Strict YYYY-MM-DD.
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto digits = [&](int from, int to) -> std::optional<int> {
        int v = 0;
        for (int i = from; i < to; ++i) {
            if (text[i] < '0' || text[i] > '9') return std::nullopt;
            v = v * 10 + (text[i] - '0');
        }
        return v;
    };
    auto y = digits(0, 4);
    auto m = digits(5, 7);
    auto d = digits(8, 10);
    if (!y || !m || !d) return std::nullopt;
    if (*m < 1 || *m > 12 || *d < 1) return std::nullopt;
    static const int days_in[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int max_day = days_in[*m - 1];
    bool leap = (*y % 4 == 0 && *y % 100 != 0) || *y % 400 == 0;
    if (*m == 2 && leap) max_day = 29;
    if (*d > max_day) return std::nullopt;
    return Date{*y, *m, *d};
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

ChoiceSet ChoiceSet::of(std::vector<std::string> texts) {
    std::sort(texts.begin(), texts.end());
    texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
    return ChoiceSet{std::move(texts)};
}

bool ChoiceSet::contains(std::string_view t) const {
    return std::binary_search(texts.begin(), texts.end(), t);
}

bool number_equal(double a, double b) {
    return std::fabs(a - b) <= kNumberEqTolerance;
}

bool Value::operator==(const Value& other) const {
    if (data_.index() != other.data_.index()) return false;
    if (is_number()) return number_equal(as_number(), other.as_number());
    return data_ == other.data_;
}

namespace {

// Relative nudge, a handful of ulps, that moves doubles carrying decimal
// literals back onto the intended side of a rounding boundary.
constexpr double kDecimalNudge = 4 * std::numeric_limits<double>::epsilon();

double pow10i(int places) {
    double scale = 1.0;
    for (int i = 0; i < places; ++i) scale *= 10.0;
    return scale;
}

} // namespace

double decimal_ceil(double x) {
    return std::ceil(x - std::fabs(x) * kDecimalNudge);
}

double decimal_floor(double x) {
    return std::floor(x + std::fabs(x) * kDecimalNudge);
}

double round_half_away(double x, int places) {
    double scale = pow10i(places);
    double scaled = x * scale;
    // Push away from zero so that a decimal .5 stored just below the
    // boundary still rounds away (std::round is half-away-from-zero).
    scaled += (scaled >= 0 ? 1 : -1) * std::fabs(scaled) * kDecimalNudge;
    return std::round(scaled) / scale;
}

double ceil_at_places(double x, int places) {
    double scale = pow10i(places);
    return decimal_ceil(x * scale) / scale;
}

double floor_at_places(double x, int places) {
    double scale = pow10i(places);
    return decimal_floor(x * scale) / scale;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, ".00") == 0) s.erase(s.size() - 3);
    if (s == "-0") s = "0";
    if (s == "-0.00") s = "0";
    return s;
}

namespace {

// Fixed-notation rendering with trailing zeros trimmed; never scientific.
std::string shortest_fixed(double v) {
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[512];
        std::snprintf(buf, sizeof buf, "%.*f", prec, v);
        if (std::strtod(buf, nullptr) == v) {
            std::string s = buf;
            while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
            return s;
        }
    }
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.17f", v);
    return buf;
}

} // namespace

std::string format_grammar_double(double v) {
    std::string s = shortest_fixed(v);
    if (s.find('.') == std::string::npos) s += ".0";
    return s;
}

std::string format_grammar_int(double v) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
}

} // namespace esea
