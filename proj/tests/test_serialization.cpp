#include <doctest.h>

#include "tak/error.hpp"
#include "tak/format.hpp"
#include "tak/serialization.hpp"

using namespace tak;

TEST_CASE("complex literals") {
    CHECK(parse_complex("1.5") == Complex(1.5, 0));
    CHECK(parse_complex("-2") == Complex(-2, 0));
    CHECK(parse_complex("3i") == Complex(0, 3));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("1+2i") == Complex(1, 2));
    CHECK(parse_complex("0-0.5i") == Complex(0, -0.5));
    CHECK(parse_complex("1e-3-2.5e2i") == Complex(1e-3, -250));
    CHECK(parse_complex("2.5e+1+1e-1i") == Complex(25, 0.1));
    for (const char* bad : {"", "x", "1+", "1+2", "i1", "1++2i", "--1", "1 + 2i", "2ii"})
        CHECK_THROWS_AS(parse_complex(bad), ParameterError);
    for (Complex c : {Complex(0.1, -0.2), Complex(-3, 0), Complex(0, 1e-7), Complex(1.0 / 3, 2.0 / 7)}) {
        const Complex back = parse_complex(format_complex(c));
        CHECK(std::abs(back - c) <= 1e-11 * std::abs(c));
    }
}

TEST_CASE("number formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0 / 3) == "0.333333333333");
    CHECK(format_double(1e-20) == "1e-20");
    CHECK(round12(1.0 / 3) == 0.333333333333);
    CHECK(format_complex(Complex(1, -2)) == "1-2i");
    CHECK(format_complex(Complex(0, 0)) == "0");
}

TEST_CASE("JSON round trips") {
    CHECK(complex_json(Complex(1.5, -2)) == Json::array({1.5, -2.0}));
    CHECK(complex_from_json(Json::array({0.25, 3})) == Complex(0.25, 3));

    const ComplexLaurentPoly p(-2, {Complex(1, 1), 0.0, Complex(-3.5, 0.125)});
    const Json j = to_json(p);
    CHECK(j["min_exp"] == -2);
    CHECK(j["coeffs"].size() == 3);
    const auto back = laurent_from_json(j);
    CHECK(back.min_exp() == -2);
    CHECK(distance(back, p) == 0.0);
    CHECK(laurent_from_json(Json::parse(j.dump())).coeffs() == p.coeffs());
}

TEST_CASE("report schemas") {
    const auto results = census(Family::B3, 1, 1, {Mode::Deficient, Mode::Monic});
    const Json j = to_json(results);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    for (const char* key : {"family", "n", "mode", "found", "theorem", "counts_match", "all_verified", "witnesses"}) CHECK(j[0].contains(key));
    const Json& w = j[1]["witnesses"][0];
    CHECK(w.contains("delta"));
    const Json& d = w["delta"];
    for (const char* key : {"knot", "x", "coord", "delta", "span", "leading", "trailing", "monic", "deficient",
                            "genus_bound", "residuals"})
        CHECK(d.contains(key));
    CHECK(d["coord"].contains("z"));
    CHECK(d["knot"] == "b:7,3");
    CHECK(d["monic"] == true);
    CHECK(d["residuals"].contains("division"));
    CHECK(d["residuals"].contains("relator"));

    CHECK(census_csv(results) ==
          "family,n,mode,found,theorem,verified\n"
          "b3,1,deficient,2,2,true\n"
          "b3,1,monic,2,2,true\n");
}
