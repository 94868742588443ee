#include <doctest.h>

#include "esea/parser.hpp"
#include "esea/printer.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <random>

using namespace esea;

namespace {

raw::Method parse_ok(const std::string& src, const std::string& file = "<test>") {
    ParseResult r = parse_method(src, file);
    REQUIRE_MESSAGE(r.model.has_value(), file);
    return std::move(*r.model);
}

std::string print_formula(const std::string& src) {
    StatementParseResult r = parse_statement(src);
    REQUIRE(r.statement != nullptr);
    return print_statement(*r.statement);
}

} // namespace

TEST_CASE("round trip over the whole fixture corpus") {
    for (const auto& path : testutil::fixture_files("valid")) {
        std::string src = testutil::read_file(path);
        raw::Method first = parse_ok(src, path.string());
        std::string printed = pretty_print(first);
        ParseResult reparsed = parse_method(printed, path.string() + " (printed)");
        REQUIRE_MESSAGE(reparsed.model.has_value(), path.string());
        CHECK_MESSAGE(raw::structurally_equal(first, *reparsed.model), path.string());
    }
}

TEST_CASE("printing is deterministic and idempotent") {
    for (const auto& path : testutil::fixture_files("valid")) {
        std::string src = testutil::read_file(path);
        raw::Method model = parse_ok(src, path.string());
        std::string once = pretty_print(model);
        std::string again = pretty_print(model);
        CHECK(once == again);
        raw::Method reparsed = parse_ok(once);
        CHECK_MESSAGE(pretty_print(reparsed) == once, path.string());
    }
}

TEST_CASE("strings with quotes, backslashes and control characters survive") {
    // Escape table: decoded character -> escaped spelling.
    const std::vector<std::pair<std::string, std::string>> table = {
        {"\"", "\\\""},
        {"\\", "\\\\"},
        {"\n", "\\n"},
        {"\t", "\\t"},
    };
    for (const auto& [decoded, escaped] : table) {
        std::string name = "a" + decoded + "b";
        raw::Method m;
        m.name = name;
        m.version = 1.0;
        std::string printed = pretty_print(m);
        CHECK(printed.find("Name: \"a" + escaped + "b\"") != std::string::npos);
    }

    std::string tricky = R"(He said \"hi\"\n\ttwice \\ thrice)";
    std::string src = "Name: \"" + tricky + "\"\nVersion: 1.0\nisPublic: false\n"
                      "Description: \"d\"\nTopics:\n topic_id: t\n Name: \"T\"\n"
                      " Description: \"T.\"\nIndicators:\n Indicator_id: a\n Name: \"A\"\n"
                      " Description: \"A.\"\n Topic: t\n Indicator_type: Direct\n"
                      " DataType: double\nSurveys:\n survey_id: s\n Name: \"S\"\n"
                      " Description: \"S.\"\n SurveyType: single\n MinThreshold: 0.0\n"
                      " Sections:\n section_id: sec\n Title: \"Sec\"\n Order: 1\n Questions:\n"
                      " question_id: q\n Name: \"Q\"\n Description: \"Q.\"\n isMandatory: true\n"
                      " UIComponent: field\n Order: 1\n Indicator: a\n Instruction: \"I.\"\n"
                      "Certification_levels:\nValidation_rules:\n rule_id: r\n Name: \"R\"\n"
                      " RuleType: error\n Condition: [a] >= 0\n Message: \"M.\"\n";
    raw::Method first = parse_ok(src);
    raw::Method second = parse_ok(pretty_print(first));
    CHECK(raw::structurally_equal(first, second));
    CHECK(second.name == first.name);
}

TEST_CASE("expression printing inserts only the parentheses precedence needs") {
    CHECK(print_formula("2 + 3 * 4") == "2 + 3 * 4");
    CHECK(print_formula("(2 + 3) * 4") == "(2 + 3) * 4");
    CHECK(print_formula("2 - (3 + 4)") == "2 - (3 + 4)");
    CHECK(print_formula("2 - 3 + 4") == "2 - 3 + 4");
    CHECK(print_formula("(1 < 2) AND (3 < 4)") == "(1 < 2) AND (3 < 4)");
    CHECK(print_formula("(1 + 2) ^ (3 * 4)") == "(1 + 2) ^ (3 * 4)");
    CHECK(print_formula("2 ^ 3") == "2 ^ 3");
    CHECK(print_formula("IF [a] > 5 THEN 1 ELSE 0") == "IF [a] > 5 THEN 1 ELSE 0");
    CHECK(print_formula("countIf([m], \"bike\") / 2") == "countIf([m], \"bike\") / 2");
    CHECK(print_formula("avg([x]) + abs(0 - 1)") == "avg([x]) + abs(0 - 1)");
}

TEST_CASE("number literal forms are preserved") {
    CHECK(print_formula("2.0 + 2") == "2.0 + 2");
    CHECK(print_formula("0.5") == "0.5");
    CHECK(print_formula("10") == "10");
}

TEST_CASE("random literal expressions round trip through print and reparse") {
    oracle::ExprGen gen(20260809);
    for (int i = 0; i < 500; ++i) {
        std::string text = gen.expression();
        StatementParseResult first = parse_statement(text);
        REQUIRE_MESSAGE(first.statement != nullptr, text);
        std::string printed = print_statement(*first.statement);
        StatementParseResult second = parse_statement(printed);
        REQUIRE_MESSAGE(second.statement != nullptr, printed);
        CHECK_MESSAGE(structurally_equal(first.statement, second.statement),
                      text << " vs " << printed);
    }
}
