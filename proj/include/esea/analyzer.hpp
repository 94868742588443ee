#pragma once

#include "esea/ast.hpp"
#include "esea/diagnostics.hpp"
#include "esea/model.hpp"
#include "esea/raw_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace esea {

// Conservative static type of an expression; unknown never triggers a
// diagnostic by itself.
enum class ValueType { number, text, boolean, date, choice, choice_set, unknown };

const char* to_string(ValueType t);

struct AnalysisResult {
    std::optional<EseaMethod> method; // set only when there are no errors
    std::vector<Diagnostic> diagnostics;
};

// Resolves every cross-reference and enforces the model constraints:
// unique ids (E-DUP-ID), resolvable references (E-UNRESOLVED), order
// uniqueness inside surveys and sections (E-DUP-ORDER), answer-option
// rules (E-OPT), acyclic topic parents (E-TOPIC-CYCLE), questions binding
// only direct indicators (E-QDIR), boolean conditions and requirements
// (E-TYPE), countIf over plain references (E-COUNTIF-REF), formula and
// condition cycles (E-CYCLE), and the registration-survey rules
// (E-REG-SINGLE, W-REGBIND). Diagnostics come back sorted by
// (file, offset, code).
AnalysisResult resolve_and_validate(const raw::Method& raw, std::string file = "<input>");

// Directed dependency graph walk: an edge A -> B exists when A's formula
// or condition references B. Returns every elementary cycle as a list of
// indicator ids; empty means acyclic.
std::vector<std::vector<std::string>> detect_formula_cycles(const EseaMethod& method);

ValueType infer_expression_type(const Expr& expr, const EseaMethod& method);
ValueType infer_statement_type(const Stmt& stmt, const EseaMethod& method);

ValueType value_type_of(DatatypeKind datatype);

} // namespace esea
