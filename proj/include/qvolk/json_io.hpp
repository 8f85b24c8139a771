#pragma once

// JSON forms of the value types. All numbers are exact decimal strings;
// parse(to_json(x)) == x for every type here.

#include <string>
#include <vector>

#include <json.hpp>

#include "bigrational.hpp"
#include "cyclotomic.hpp"
#include "generating_functions.hpp"
#include "measure.hpp"
#include "padic.hpp"
#include "rational_function.hpp"

namespace qvolk::json_io {

using json = nlohmann::ordered_json;

inline json to_json(const BigRational& r) { return to_string(r); }

inline BigRational rational_from_json(const json& j) {
    if (!j.is_string()) throw precondition_error("expected a rational string");
    return parse_rational(j.get<std::string>());
}

inline json poly_to_json(const QPoly& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_string(c));
    return a;
}

inline QPoly poly_from_json(const json& j) {
    std::vector<BigRational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return QPoly(std::move(c));
}

/// {"D", "num", "den"}, coefficients by ascending degree, monic den.
inline json to_json(const RationalFunction& f) {
    json j;
    j["D"] = f.root_order();
    j["num"] = poly_to_json(f.numerator());
    j["den"] = poly_to_json(f.denominator());
    return j;
}

inline RationalFunction rational_function_from_json(const json& j) {
    return RationalFunction::from_fraction(poly_from_json(j.at("num")), poly_from_json(j.at("den")),
                                           j.at("D").get<int>());
}

/// {"p", "v", "unit", "A", "zero"}; A is the exponent the unit is known
/// modulo, and for zero-at-precision v is the valuation lower bound.
inline json to_json(const PadicNumber& x) {
    json j;
    j["p"] = x.prime();
    j["v"] = x.valuation().value;
    j["unit"] = to_string(x.unit());
    j["A"] = x.relative_precision();
    j["zero"] = x.is_zero();
    return j;
}

inline PadicNumber padic_from_json(const json& j) {
    const auto p = j.at("p").get<unsigned long>();
    const auto v = j.at("v").get<long>();
    if (j.value("zero", false)) return PadicNumber::zero(p, v);
    return PadicNumber::from_parts(p, v, BigInt(j.at("unit").get<std::string>()), j.at("A").get<int>());
}

/// {"L", "D", "coeffs": [rational function per power of z]}.
inline json to_json(const CyclotomicElement& x) {
    json j;
    j["L"] = x.order();
    j["D"] = x.root_order();
    j["coeffs"] = json::array();
    for (const auto& c : x.coefficients()) j["coeffs"].push_back(to_json(c));
    return j;
}

inline CyclotomicElement cyclotomic_from_json(const json& j) {
    const int order = j.at("L").get<int>();
    CyclotomicElement r(order, j.at("D").get<int>());
    long k = 0;
    for (const auto& c : j.at("coeffs")) r = r + CyclotomicElement::z_power(order, k++, rational_function_from_json(c));
    return r;
}

template <QReading Q>
json to_json(const IntegrationResult<Q>& r) {
    json j;
    j["value"] = to_json(r.value);
    j["N_used"] = r.levels_used;
    j["stability"] = r.stability;
    j["trace"] = r.trace;
    return j;
}

inline json to_json(const LimitRow& r) {
    json j;
    j["n"] = r.n;
    j["K_limit"] = to_string(r.k_limit);
    j["E_n"] = to_string(r.euler);
    j["equal"] = r.equal;
    return j;
}

inline json to_json(const LimitReport& r) {
    json j;
    j["numbers"] = json::array();
    for (const auto& row : r.numbers) j["numbers"].push_back(to_json(row));
    j["series"] = json::array();
    for (const auto& row : r.series) j["series"].push_back(to_json(row));
    j["all_equal"] = r.all_equal();
    return j;
}

} // namespace qvolk::json_io
