#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpart/det.hpp"
#include "qpart/general_mod.hpp"
#include "qpart/integers.hpp"
#include "qpart/series.hpp"

namespace qpart {

// JSON wire formats. Coefficients always travel as decimal strings: the
// values routinely exceed what JSON numbers can carry exactly.
//   series        {"order": K, "coeffs": ["1", "-1", ...]}   (K+1 strings)
//   DetProblem    {"dcol": [...], "zcol": [...]}
//   ModulusPlan   {"N": n, "dser": <series>, "zser": [<series> x n]}
// Parsing is strict: wrong shapes, wrong lengths and non-decimal strings
// are rejected with a message naming the offending field.

namespace detail {

inline std::vector<Int> int_vector_from_json(const nlohmann::json& j,
                                             const std::string& field) {
    if (!j.is_array())
        throw std::invalid_argument("json: '" + field + "' must be an array");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string())
            throw std::invalid_argument("json: '" + field +
                                        "' entries must be decimal strings");
        v.push_back(parse_decimal(e.get<std::string>()));
    }
    return v;
}

inline nlohmann::json int_vector_to_json(const std::vector<Int>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(to_decimal(x));
    return a;
}

}  // namespace detail

inline nlohmann::json series_to_json(const TruncatedSeries<Int>& s) {
    return {{"order", s.order()}, {"coeffs", detail::int_vector_to_json(s.coeffs())}};
}

inline TruncatedSeries<Int> series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("json: series needs 'order' and 'coeffs'");
    if (!j["order"].is_number_integer())
        throw std::invalid_argument("json: 'order' must be an integer");
    const long order = j["order"].get<long>();
    auto coeffs = detail::int_vector_from_json(j["coeffs"], "coeffs");
    if (order < 0 || static_cast<long>(coeffs.size()) != order + 1)
        throw std::invalid_argument("json: series length does not match order");
    return TruncatedSeries<Int>(std::move(coeffs));
}

inline nlohmann::json det_problem_to_json(const DetProblem& p) {
    return {{"dcol", detail::int_vector_to_json(p.dcol())},
            {"zcol", detail::int_vector_to_json(p.zcol())}};
}

inline DetProblem det_problem_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dcol") || !j.contains("zcol"))
        throw std::invalid_argument("json: DetProblem needs 'dcol' and 'zcol'");
    return DetProblem(detail::int_vector_from_json(j["dcol"], "dcol"),
                      detail::int_vector_from_json(j["zcol"], "zcol"));
}

inline nlohmann::json plan_to_json(const ModulusPlan& plan) {
    nlohmann::json zs = nlohmann::json::array();
    for (const auto& z : plan.zser) zs.push_back(series_to_json(z));
    return {{"N", plan.N}, {"dser", series_to_json(plan.dser)}, {"zser", zs}};
}

inline ModulusPlan plan_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("dser") ||
        !j.contains("zser"))
        throw std::invalid_argument("json: ModulusPlan needs 'N', 'dser', 'zser'");
    if (!j["N"].is_number_integer())
        throw std::invalid_argument("json: 'N' must be an integer");
    if (!j["zser"].is_array())
        throw std::invalid_argument("json: 'zser' must be an array");
    std::vector<TruncatedSeries<Int>> zs;
    zs.reserve(j["zser"].size());
    for (const auto& e : j["zser"]) zs.push_back(series_from_json(e));
    // The ModulusPlan constructor re-validates support and constant terms,
    // so a structurally valid but mathematically wrong file is rejected too.
    return ModulusPlan(j["N"].get<long>(), series_from_json(j["dser"]),
                       std::move(zs));
}

}  // namespace qpart
