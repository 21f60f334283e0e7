#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run tak_run(std::vector<std::string> args) {
    args.insert(args.begin(), "tak");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = tak::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("compute") {
    const auto def = tak_run({"compute", "--knot", "b:7,3", "--x", "0+0.408248290464i", "--z", "0.5"});
    REQUIRE(def.code == 0);
    const auto j = nlohmann::json::parse(def.out);
    CHECK(j["deficient"] == true);
    CHECK(j["span"].get<int>() < 2);

    const auto bad = tak_run({"compute", "--knot", "twist:2", "--x", "1.2", "--y", "0.3"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("relator residual") != std::string::npos);

    // a trefoil Riley root: x^2 = y + 1 (R_odd at n = 1)
    const auto tre = tak_run({"compute", "--knot", "twist:1", "--x", "1.1+0.3i", "--y", "0.12+0.66i", "--format", "text"});
    CHECK(tre.code == 0);
    CHECK(tre.out.find("span=2") != std::string::npos);
    CHECK(tre.out.find("monic=yes") != std::string::npos);

    CHECK(tak_run({"compute", "--knot", "b:7,3", "--x", "2", "--z", "2"}).code == 1);
    CHECK(tak_run({"compute", "--knot", "b:8,3", "--x", "1", "--z", "0"}).code == 2);
    CHECK(tak_run({"compute", "--knot", "b:7,3", "--x", "1+", "--z", "0"}).code == 2);
    CHECK(tak_run({"compute", "--knot", "b:7,3", "--x", "1", "--y", "0"}).code == 2);
    CHECK(tak_run({"compute", "--knot", "b:7,3"}).code == 2);
}

TEST_CASE("solve") {
    const auto b3 = tak_run({"solve", "--family", "b3", "--n", "2", "--mode", "monic"});
    CHECK(b3.code == 0);
    CHECK(nlohmann::json::parse(b3.out).size() == 4);
    const auto te = tak_run({"solve", "--family", "twist-even", "--n", "2", "--mode", "deficient", "--format", "csv"});
    CHECK(te.code == 0);
    CHECK(count_lines(te.out) == 3);
    const auto to = tak_run({"solve", "--family", "twist-odd", "--n", "3", "--mode", "deficient"});
    CHECK(to.code == 0);
    CHECK(nlohmann::json::parse(to.out).empty());
    CHECK(tak_run({"solve", "--family", "twist-odd", "--n", "1", "--mode", "monic"}).code == 2);
    CHECK(tak_run({"solve", "--family", "b5", "--n", "1", "--mode", "monic"}).code == 2);
}

TEST_CASE("verify") {
    const auto b3 = tak_run({"verify", "--family", "b3", "--n", "1..5"});
    CHECK(b3.code == 0);
    CHECK(b3.err.empty());

    const auto odd = tak_run({"verify", "--family", "twist-odd", "--n-range", "2..8", "--format", "text"});
    CHECK(odd.code == 0);

    // the computed K_2n monic counts fall one short of the closed form at n = 2, 5, 8
    const auto even = tak_run({"verify", "--family", "twist-even", "--n", "2..8"});
    CHECK(even.code == 1);
    CHECK(count_lines(even.err) == 3);
    for (const char* n : {"n=2 monic", "n=5 monic", "n=8 monic"}) CHECK(even.err.find(n) != std::string::npos);

    const auto all = tak_run({"verify", "--family", "all", "--n", "2..8", "--format", "csv"});
    CHECK(count_lines(all.out) == 43);
    CHECK(all.out.rfind("family,n,mode,found,theorem,verified\n", 0) == 0);

    CHECK(tak_run({"verify", "--family", "all", "--n", "1..8"}).code == 2);
    CHECK(tak_run({"verify", "--family", "b3", "--n", "5..1"}).code == 2);
    CHECK(tak_run({"verify", "--family", "b3"}).code == 2);
    CHECK(tak_run({"verify", "--family", "b3", "--n", "1", "--tolerance", "-1"}).code == 2);
}

TEST_CASE("alexander") {
    const auto k = nlohmann::json::parse(tak_run({"alexander", "--knot", "b:7,3"}).out);
    CHECK(k["leading"] == 2);
    CHECK(k["fibered"] == false);
    const auto f = nlohmann::json::parse(tak_run({"alexander", "--knot", "b:11,3"}).out);
    CHECK(f["leading"] == 1);
    CHECK(f["fibered"] == true);
    const auto e = nlohmann::json::parse(tak_run({"alexander", "--knot", "twist:2"}).out);
    CHECK(e["polynomial"] == "t^2 - 3t + 1");
    CHECK(e["fibered"] == true);
    CHECK(tak_run({"alexander", "--knot", "b:7"}).code == 2);
}

TEST_CASE("usage errors and stable output") {
    CHECK(tak_run({}).code == 2);
    CHECK(tak_run({"frobnicate"}).code == 2);
    CHECK(tak_run({"verify", "--family", "b3", "--n", "1", "--format", "xml"}).code == 2);

    const std::vector<std::string> args = {"verify", "--family", "all", "--n", "2..4"};
    const auto first = tak_run(args), second = tak_run(args);
    CHECK(first.out == second.out);
    const auto s1 = tak_run({"sample", "--knot", "b:13,3", "--count", "5", "--seed", "3"});
    const auto s2 = tak_run({"sample", "--knot", "b:13,3", "--count", "5", "--seed", "3"});
    CHECK(s1.code == 0);
    CHECK(s1.out == s2.out);
    CHECK(nlohmann::json::parse(s1.out).size() == 5);
}
