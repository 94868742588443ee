#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace esea {

// Half-open byte range into a source buffer, with 1-based line/column of its start.
struct Span {
    std::size_t offset = 0;
    std::size_t length = 0;
    int line = 0;
    int column = 0;

    bool operator==(const Span&) const = default;
};

enum class Severity { error, warning };

const char* to_string(Severity s);

struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;
    Span span;
    std::string message;
    std::string file;
};

bool has_errors(const std::vector<Diagnostic>& diags);

// Stable report order: (file, offset, code).
void sort_diagnostics(std::vector<Diagnostic>& diags);

// "file:line:col: severity[code] message". ANSI color around the severity when requested.
std::string render_diagnostic(const Diagnostic& d, bool color = false);

// Structured form: JSON array of {file, line, column, severity, code, message}.
std::string render_diagnostics_json(const std::vector<Diagnostic>& diags);

} // namespace esea
