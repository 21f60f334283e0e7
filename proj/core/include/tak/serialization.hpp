#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tak/laurent.hpp"
#include "tak/solver.hpp"
#include "tak/twisted_alexander.hpp"

namespace tak {

using Json = nlohmann::json;

/// [re, im], each rounded to 12 significant digits.
Json complex_json(Complex c);
Complex complex_from_json(const Json& j);

/// { "min_exp": int, "coeffs": [[re, im], ...] } in ascending exponent order.
Json to_json(const ComplexLaurentPoly& p);
ComplexLaurentPoly laurent_from_json(const Json& j);

/// { "knot", "x", "coord": {"z"|"y": [re, im]}, "delta", "span", "leading", "trailing",
///   "monic", "deficient", "genus_bound", "residuals": {"division", "relator"} }
Json to_json(const DeltaReport& r);
Json to_json(const WitnessReport& w);
Json to_json(const CountResult& c);
Json to_json(const std::vector<CountResult>& cs);

/// Header family,n,mode,found,theorem,verified then one row per result.
std::string census_csv(const std::vector<CountResult>& cs);

}  // namespace tak
