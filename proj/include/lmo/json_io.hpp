#pragma once

#include "lmo/hbar_series.hpp"
#include "lmo/rational.hpp"
#include "lmo/reduced_element.hpp"

#include <json.hpp>

#include <string>

namespace lmo {

// Series as an array of exact coefficient strings, index = hbar degree.
inline nlohmann::json to_json(const HbarSeries& z) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k <= z.order_cap(); ++k) arr.push_back(to_string(z[k]));
    return arr;
}

inline HbarSeries hbar_series_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("hbar series json: expected a non-empty array");
    HbarSeries z(static_cast<int>(j.size()) - 1);
    for (int k = 0; k < static_cast<int>(j.size()); ++k)
        z.coeff(k) = parse_rational(j[k].get<std::string>());
    return z;
}

inline nlohmann::json to_json(const ReducedElement& e) {
    nlohmann::json rows = nlohmann::json::array();
    for (int m = 0; m <= e.s_cap(); ++m) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k <= e.hbar_cap(); ++k) row.push_back(to_string(e.coeff(m, k)));
        rows.push_back(row);
    }
    return nlohmann::json{
        {"s_cap", e.s_cap()}, {"hbar_cap", e.hbar_cap()}, {"coeffs", rows}};
}

inline ReducedElement reduced_element_from_json(const nlohmann::json& j) {
    int sc = j.at("s_cap").get<int>();
    int hc = j.at("hbar_cap").get<int>();
    const auto& rows = j.at("coeffs");
    if (!rows.is_array() || static_cast<int>(rows.size()) != sc + 1)
        throw std::invalid_argument("reduced element json: row count mismatch");
    ReducedElement e(sc, hc);
    for (int m = 0; m <= sc; ++m) {
        const auto& row = rows[m];
        if (static_cast<int>(row.size()) != hc + 1)
            throw std::invalid_argument("reduced element json: column count mismatch");
        for (int k = 0; k <= hc; ++k) e.coeff(m, k) = parse_rational(row[k].get<std::string>());
    }
    return e;
}

}  // namespace lmo
