#pragma once

#include "esea/model.hpp"

#include <string>

namespace esea {

// Structured JSON dump of a resolved model, for interoperability with
// other tooling. Formulas and conditions appear in canonical text form.
std::string export_model_json(const EseaMethod& method);

} // namespace esea
