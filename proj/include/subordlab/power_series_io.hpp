#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subordlab/power_series.hpp"

namespace subordlab {

/// Parse the coefficient file format: a JSON array of [re, im] pairs,
/// index = power. The class tag is inferred: a_0 = 0 and a_1 = 1 gives
/// NormalizedH, otherwise H[a,n] with n the first nonzero index.
inline PowerSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("coefficient file must be a non-empty JSON array");
    std::vector<cplx> c;
    c.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
            !item[1].is_number())
            throw ParseError("each coefficient must be a [re, im] pair");
        c.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    if (c.size() >= 2 && c[0] == cplx{0.0, 0.0} && c[1] == cplx{1.0, 0.0})
        return PowerSeries::normalized(std::move(c));
    cplx a = c[0];
    int n = 0;
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] != cplx{0.0, 0.0}) {
            n = static_cast<int>(k);
            break;
        }
    if (n == 0) n = std::max<int>(1, static_cast<int>(c.size()) - 1);
    return PowerSeries::ham(std::move(c), a, n);
}

inline PowerSeries load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coefficient file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return series_from_json(j);
}

inline nlohmann::json series_to_json(const PowerSeries& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const cplx& a : p.coefficients()) j.push_back({a.real(), a.imag()});
    return j;
}

}  // namespace subordlab
