#include "esea/account.hpp"
#include "esea/analyzer.hpp"
#include "esea/export.hpp"
#include "esea/parser.hpp"
#include "esea/printer.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifdef _WIN32
#include <io.h>
#define ESEA_ISATTY _isatty
#define ESEA_FILENO _fileno
#else
#include <unistd.h>
#define ESEA_ISATTY isatty
#define ESEA_FILENO fileno
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitErrors = 1;
constexpr int kExitUsage = 2;

bool use_color() {
    if (const char* env = std::getenv("ESEA_COLOR")) {
        return std::string_view(env) == "1";
    }
    return ESEA_ISATTY(ESEA_FILENO(stderr)) != 0;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_diagnostics(const std::vector<esea::Diagnostic>& diags, bool color) {
    for (const esea::Diagnostic& d : diags) {
        std::cerr << esea::render_diagnostic(d, color) << "\n";
    }
}

void print_runtime_diags(const std::vector<esea::RuntimeDiag>& diags, const std::string& file,
                         bool color) {
    for (const esea::RuntimeDiag& d : diags) {
        std::cerr << file << ": ";
        if (color) {
            std::cerr << (d.severity == esea::Severity::error ? "\x1b[1;31m" : "\x1b[1;33m")
                      << to_string(d.severity) << '[' << d.code << ']' << "\x1b[0m";
        } else {
            std::cerr << to_string(d.severity) << '[' << d.code << ']';
        }
        std::cerr << ' ' << d.context << ": " << d.message << "\n";
    }
}

int exit_code_for(bool errors, bool warnings, bool strict) {
    if (errors) return kExitErrors;
    if (warnings && strict) return kExitErrors;
    return kExitOk;
}

struct LoadedModel {
    esea::EseaMethod method;
    bool warnings = false;
};

// Parse + validate; on failure prints diagnostics and returns nullopt with
// exit_code set.
std::optional<LoadedModel> load_model(const std::string& path, bool color, bool strict,
                                      int& exit_code) {
    auto source = read_file(path);
    if (!source) {
        std::cerr << "esea: cannot open '" << path << "'\n";
        exit_code = kExitUsage;
        return std::nullopt;
    }
    esea::ParseResult parsed = esea::parse_method(*source, path);
    if (!parsed.model) {
        print_diagnostics(parsed.diagnostics, color);
        exit_code = kExitErrors;
        return std::nullopt;
    }
    esea::AnalysisResult analyzed = esea::resolve_and_validate(*parsed.model, path);
    print_diagnostics(analyzed.diagnostics, color);
    bool warnings = !analyzed.diagnostics.empty();
    if (!analyzed.method) {
        exit_code = kExitErrors;
        return std::nullopt;
    }
    if (warnings && strict) {
        exit_code = kExitErrors;
        return std::nullopt;
    }
    exit_code = kExitOk;
    return LoadedModel{std::move(*analyzed.method), warnings};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolchain for textual ESEA method models"};
    app.require_subcommand(1);
    bool strict = false;
    app.add_flag("--strict", strict, "treat warnings as errors (exit 1)");

    std::string check_path;
    CLI::App* check = app.add_subcommand("check", "parse and validate a model");
    check->add_option("model", check_path, "path to the .esea model")->required();

    std::string fmt_path;
    bool fmt_write = false;
    CLI::App* fmt = app.add_subcommand("fmt", "canonically format a model");
    fmt->add_option("model", fmt_path, "path to the .esea model")->required();
    fmt->add_flag("--write", fmt_write, "rewrite the file in place");

    std::string eval_path;
    std::vector<std::string> eval_responses;
    std::string eval_format = "text";
    std::string eval_out;
    CLI::App* eval = app.add_subcommand("eval", "evaluate survey responses against a model");
    eval->add_option("model", eval_path, "path to the .esea model")->required();
    eval->add_option("--responses,-r", eval_responses, "responses JSON file (repeatable)")
        ->required();
    eval->add_option("--format", eval_format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    eval->add_option("--out", eval_out, "write the report to a file instead of stdout");

    std::string export_path;
    std::string export_format = "json";
    CLI::App* exp = app.add_subcommand("export", "dump the resolved model");
    exp->add_option("model", export_path, "path to the .esea model")->required();
    exp->add_option("--format", export_format, "export format (json)")
        ->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "esea: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const bool color = use_color();

    if (check->parsed()) {
        int code = kExitOk;
        auto model = load_model(check_path, color, strict, code);
        (void)model;
        return code;
    }

    if (fmt->parsed()) {
        auto source = read_file(fmt_path);
        if (!source) {
            std::cerr << "esea: cannot open '" << fmt_path << "'\n";
            return kExitUsage;
        }
        esea::ParseResult parsed = esea::parse_method(*source, fmt_path);
        print_diagnostics(parsed.diagnostics, color);
        if (!parsed.model) return kExitErrors;
        std::string formatted = esea::pretty_print(*parsed.model);
        if (fmt_write) {
            std::ofstream out(fmt_path, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "esea: cannot write '" << fmt_path << "'\n";
                return kExitUsage;
            }
            out << formatted;
        } else {
            std::cout << formatted;
        }
        return exit_code_for(false, !parsed.diagnostics.empty(), strict);
    }

    if (eval->parsed()) {
        if (!eval_out.empty() && eval_responses.size() > 1) {
            std::cerr << "esea: --out supports a single --responses file\n";
            return kExitUsage;
        }
        int code = kExitOk;
        auto model = load_model(eval_path, color, strict, code);
        if (!model) return code;

        bool errors = false;
        bool warnings = model->warnings;
        for (const std::string& responses_path : eval_responses) {
            esea::LoadResult loaded = esea::load_responses(model->method, responses_path);
            print_diagnostics(loaded.diagnostics, color);
            if (!loaded.data) {
                errors = true;
                continue;
            }
            warnings = warnings || !loaded.diagnostics.empty();

            esea::AccountReport report = esea::evaluate_account(model->method, *loaded.data);
            print_runtime_diags(report.diagnostics, responses_path, color);
            for (const esea::RuntimeDiag& d : report.diagnostics) {
                if (d.severity == esea::Severity::error) errors = true;
                else warnings = true;
            }

            std::string rendered = esea::render_report(
                report, model->method,
                eval_format == "json" ? esea::ReportFormat::json : esea::ReportFormat::text);
            if (!eval_out.empty()) {
                std::ofstream out(eval_out, std::ios::binary | std::ios::trunc);
                if (!out) {
                    std::cerr << "esea: cannot write '" << eval_out << "'\n";
                    return kExitUsage;
                }
                out << rendered;
            } else {
                std::cout << rendered;
            }
        }
        return exit_code_for(errors, warnings, strict);
    }

    if (exp->parsed()) {
        int code = kExitOk;
        auto model = load_model(export_path, color, strict, code);
        if (!model) return code;
        std::cout << esea::export_model_json(model->method);
        return exit_code_for(false, model->warnings, strict);
    }

    return kExitUsage;
}
