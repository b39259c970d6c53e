#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "polynomial.hpp"
#include "tableaux.hpp"

// JSON forms of the value types.  A tableau serializes as
//   {"shape":[3,2,1],"cells":[[[1],[1,3],[3,6]],[[2,3],[4,7]],[[5,6,7]]]}
// with rows top to bottom and each cell an ascending array.  Parsing
// re-validates everything, so a round trip through text is the identity on
// valid tableaux and an error otherwise.  Ordered JSON keeps field order
// (and therefore output bytes) deterministic.

namespace lascoux {

using json = nlohmann::ordered_json;

inline json tableau_to_json(const SetValuedTableau& t) {
    json shape = json::array();
    for (int p : t.shape().parts()) shape.push_back(p);
    json rows = json::array();
    for (int r = 1; r <= t.rows(); ++r) {
        json row = json::array();
        for (int c = 1; c <= t.row_length(r); ++c) row.push_back(t.cell(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"shape", std::move(shape)}, {"cells", std::move(rows)}};
}

inline std::string tableau_to_string(const SetValuedTableau& t) {
    return tableau_to_json(t).dump();
}

inline SetValuedTableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("cells") ||
        !j["shape"].is_array() || !j["cells"].is_array())
        throw parse_error("tableau JSON needs \"shape\" and \"cells\" arrays");
    std::vector<int> parts;
    for (const auto& p : j["shape"]) {
        if (!p.is_number_integer())
            throw parse_error("tableau shape must hold integers");
        parts.push_back(p.get<int>());
    }
    SetValuedTableau::Cells cells;
    for (const auto& row : j["cells"]) {
        if (!row.is_array()) throw parse_error("tableau rows must be arrays");
        std::vector<IntegerSet> out_row;
        for (const auto& cell : row) {
            if (!cell.is_array()) throw parse_error("tableau cells must be arrays");
            IntegerSet s;
            for (const auto& v : cell) {
                if (!v.is_number_integer())
                    throw parse_error("tableau entries must be integers");
                s.push_back(v.get<int>());
            }
            out_row.push_back(std::move(s));
        }
        cells.push_back(std::move(out_row));
    }
    return SetValuedTableau(Partition(std::move(parts)), std::move(cells));
}

inline SetValuedTableau tableau_from_string(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    return tableau_from_json(j);
}

/// Coefficients print as strings so arbitrary precision survives the trip.
inline json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back(json{{"beta", m.beta},
                             {"exps", m.exps},
                             {"coeff", c.str()}});
    }
    return json{{"n", p.nvars()}, {"terms", std::move(terms)}};
}

}  // namespace lascoux
