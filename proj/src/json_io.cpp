#include "rado/json_io.hpp"

namespace rado {

ZString zstring_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of integers");
    ZString s;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("string entries must be integers");
        s.push_back(v.get<Int>());
    }
    return s;
}

Json zstring_to_json(const ZString& s) { return Json(s); }

LinearEquation equation_from_json(const Json& j) {
    if (j.is_array()) return LinearEquation(zstring_from_json(j));
    if (j.is_object() && j.contains("coefficients"))
        return LinearEquation(zstring_from_json(j.at("coefficients")));
    throw ParseError("expected coefficient array or {\"coefficients\":[...]}");
}

Json equation_to_json(const LinearEquation& eq) {
    return Json{{"coefficients", eq.coefficients()}};
}

LinearEquation equation_from_text_or_json(const std::string& input) {
    auto first = input.find_first_not_of(" \t\n");
    if (first != std::string::npos && (input[first] == '[' || input[first] == '{')) {
        Json j = Json::parse(input, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) throw ParseError("malformed JSON equation");
        return equation_from_json(j);
    }
    return parse_equation(input);
}

Json verdict_to_json(const SolverVerdict& v) {
    Json j;
    switch (v.status) {
        case SolveStatus::Sat: {
            j["status"] = "sat";
            j["k"] = v.witness->row_count();
            j["rows"] = v.witness->rows;
            break;
        }
        case SolveStatus::Unsat: j["status"] = "unsat"; break;
        case SolveStatus::Indeterminate:
            j["status"] = "indeterminate";
            j["reason"] = v.indeterminate_reason;
            break;
    }
    j["states_explored"] = v.states_explored;
    j["frontier_peak"] = v.frontier_peak;
    return j;
}

WitnessMatrix witness_from_json(const Json& j) {
    const Json& rows = j.is_object() ? j.at("rows") : j;
    if (!rows.is_array()) throw ParseError("expected witness rows as an array of arrays");
    WitnessMatrix M;
    for (const auto& row : rows) M.rows.push_back(zstring_from_json(row));
    return M;
}

Json sequence_to_json(const SparseSequence& seq) {
    return Json{{"M", seq.sparsity()}, {"values", seq.values()}};
}

SparseSequence sequence_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("M") || !j.contains("values"))
        throw ParseError("expected {\"M\":.., \"values\":[..]}");
    return SparseSequence(zstring_from_json(j.at("values")), j.at("M").get<Int>());
}

Json mt_element_to_json(const MTElement& e) {
    return Json{{"value", e.value}, {"blocks", e.blocks}};
}

}  // namespace rado
