#include "esea/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace esea {

const char* to_string(Severity s) {
    return s == Severity::error ? "error" : "warning";
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.file != b.file) return a.file < b.file;
        if (a.span.offset != b.span.offset) return a.span.offset < b.span.offset;
        return a.code < b.code;
    });
}

std::string render_diagnostic(const Diagnostic& d, bool color) {
    std::ostringstream out;
    out << d.file << ':' << d.span.line << ':' << d.span.column << ": ";
    if (color) {
        out << (d.severity == Severity::error ? "\x1b[1;31m" : "\x1b[1;33m");
        out << to_string(d.severity) << '[' << d.code << ']' << "\x1b[0m";
    } else {
        out << to_string(d.severity) << '[' << d.code << ']';
    }
    out << ' ' << d.message;
    return out.str();
}

namespace {

void append_json_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

} // namespace

std::string render_diagnostics_json(const std::vector<Diagnostic>& diags) {
    std::string out = "[";
    bool first = true;
    for (const Diagnostic& d : diags) {
        if (!first) out += ',';
        first = false;
        out += "\n  {\"file\": ";
        append_json_string(out, d.file);
        out += ", \"line\": " + std::to_string(d.span.line);
        out += ", \"column\": " + std::to_string(d.span.column);
        out += ", \"severity\": ";
        append_json_string(out, to_string(d.severity));
        out += ", \"code\": ";
        append_json_string(out, d.code);
        out += ", \"message\": ";
        append_json_string(out, d.message);
        out += '}';
    }
    out += diags.empty() ? "]" : "\n]";
    return out;
}

} // namespace esea
