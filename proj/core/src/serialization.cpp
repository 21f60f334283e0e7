#include "tak/serialization.hpp"

#include <sstream>

#include "tak/error.hpp"
#include "tak/format.hpp"

namespace tak {

Json complex_json(Complex c) { return Json::array({round12(c.real()), round12(c.imag())}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParameterError("complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const ComplexLaurentPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(complex_json(c));
    return {{"min_exp", p.min_exp()}, {"coeffs", coeffs}};
}

ComplexLaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs"))
        throw ParameterError("Laurent polynomial JSON needs min_exp and coeffs");
    std::vector<Complex> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
    return ComplexLaurentPoly(j.at("min_exp").get<int>(), std::move(coeffs));
}

namespace {

Json coord_json(const TraceCoords& c) {
    if (const auto* p = std::get_if<TraceCoordsPlus>(&c)) return {{"z", complex_json(p->z)}};
    return {{"y", complex_json(std::get<TraceCoordsMinus>(c).y)}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const DeltaReport& r) {
    return {
        {"knot", r.knot},
        {"x", complex_json(x_of(r.coords))},
        {"coord", coord_json(r.coords)},
        {"delta", to_json(r.delta)},
        {"span", r.span},
        {"leading", complex_json(r.leading)},
        {"trailing", complex_json(r.trailing)},
        {"monic", r.monic},
        {"deficient", optional_json(r.deficient)},
        {"genus_bound", optional_json(r.genus_bound)},
        {"residuals", {{"division", round12(r.division_remainder)}, {"relator", round12(r.relator_residual)}}},
    };
}

Json to_json(const WitnessReport& w) {
    return {
        {"family", to_string(w.family)},
        {"n", w.n},
        {"mode", to_string(w.mode)},
        {"x", complex_json(x_of(w.coords))},
        {"coord", coord_json(w.coords)},
        {"riley_residual", round12(w.riley_residual)},
        {"boundary", complex_json(w.boundary_value)},
        {"multiplicity", w.multiplicity},
        {"verified", w.verified},
        {"x_near_minus_two", w.x_near_minus_two},
        {"issues", w.issues},
        {"delta", w.delta ? to_json(*w.delta) : Json(nullptr)},
    };
}

Json to_json(const CountResult& c) {
    Json ws = Json::array();
    for (const auto& w : c.witnesses) ws.push_back(to_json(w));
    return {
        {"family", to_string(c.family)},
        {"n", c.n},
        {"mode", to_string(c.mode)},
        {"found", c.found_count},
        {"theorem", c.theorem_count},
        {"counts_match", c.counts_match()},
        {"all_verified", c.all_verified},
        {"witnesses", ws},
    };
}

Json to_json(const std::vector<CountResult>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(to_json(c));
    return out;
}

std::string census_csv(const std::vector<CountResult>& cs) {
    std::ostringstream os;
    os << "family,n,mode,found,theorem,verified\n";
    for (const auto& c : cs)
        os << to_string(c.family) << ',' << c.n << ',' << to_string(c.mode) << ',' << c.found_count << ','
           << c.theorem_count << ',' << (c.all_verified ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace tak
