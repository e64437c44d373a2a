#pragma once

#include <string>

#include <json.hpp>

#include "rado/equations.hpp"
#include "rado/mtsystems.hpp"
#include "rado/solver.hpp"
#include "rado/strings.hpp"

namespace rado {

using Json = nlohmann::json;

// Strings serialize as JSON arrays of integers, equations as
// {"coefficients":[...]} (a bare array is accepted too).

ZString zstring_from_json(const Json& j);
Json zstring_to_json(const ZString& s);

LinearEquation equation_from_json(const Json& j);
Json equation_to_json(const LinearEquation& eq);

// Accepts either the text grammar ("3x1-5x2+2x3") or a JSON form.
LinearEquation equation_from_text_or_json(const std::string& input);

Json verdict_to_json(const SolverVerdict& v);
WitnessMatrix witness_from_json(const Json& j);

Json sequence_to_json(const SparseSequence& seq);
SparseSequence sequence_from_json(const Json& j);

Json mt_element_to_json(const MTElement& e);

}  // namespace rado
