#include "tak/knots.hpp"

#include <charconv>
#include <climits>
#include <map>
#include <numeric>

#include "tak/error.hpp"

namespace tak {

TwoBridgeKnot TwoBridgeKnot::make(int p, int m) {
    if (p % 2 == 0 || m % 2 == 0) throw ParameterError("b(p,m) needs p and m odd");
    if (!(p > m && m >= 1)) throw ParameterError("b(p,m) needs p > m >= 1");
    if (std::gcd(p, m) != 1) throw ParameterError("b(p,m) needs gcd(p,m) = 1");
    return {p, m};
}

TwistKnot TwistKnot::make(int m) {
    if (m < 1) throw ParameterError("twist knot K_m needs m >= 1");
    return {m};
}

TwistKnot TwistKnot::from_index(TwistParity parity, int n) {
    return make(parity == TwistParity::Even ? 2 * n : 2 * n - 1);
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParameterError("bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

}  // namespace

Knot parse_knot_spec(std::string_view spec) {
    if (spec.starts_with("b:")) {
        auto body = spec.substr(2);
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw ParameterError("knot spec must be b:p,m");
        return TwoBridgeKnot::make(parse_int(body.substr(0, comma), "p"), parse_int(body.substr(comma + 1), "m"));
    }
    if (spec.starts_with("twist:")) return TwistKnot::make(parse_int(spec.substr(6), "m"));
    throw ParameterError("unknown knot spec '" + std::string(spec) + "' (expected b:p,m or twist:m)");
}

std::string to_spec(const Knot& k) {
    if (const auto* b = std::get_if<TwoBridgeKnot>(&k)) return "b:" + std::to_string(b->p) + "," + std::to_string(b->m);
    return "twist:" + std::to_string(std::get<TwistKnot>(k).m);
}

FreeWord two_bridge_word(const TwoBridgeKnot& k) {
    std::vector<Letter> raw;
    raw.reserve(static_cast<std::size_t>(k.p - 1));
    for (int j = 1; j <= k.p - 1; ++j) {
        const int sign = ((j * k.m) / k.p) % 2 == 0 ? 1 : -1;
        raw.push_back({j % 2 == 1 ? Generator::A : Generator::B, sign});
    }
    return FreeWord::reduce(raw);
}

FreeWord twist_knot_word(const TwistKnot& k) {
    const int n = k.index();
    const FreeWord ba = word_b() * word_a(-1);
    const FreeWord ab = word_a() * word_b(-1);
    if (k.parity() == TwistParity::Even) return ba.pow(n) * word_b() * ab.pow(n);
    return ab.pow(n) * word_b() * ba.pow(n);
}

std::optional<int> genus(const Knot& k) {
    if (const auto* b = std::get_if<TwoBridgeKnot>(&k)) {
        if (b->m == 3 && b->p % 6 == 1) return (b->p - 1) / 6;
        return std::nullopt;
    }
    return 1;
}

std::optional<bool> is_fibered(const Knot& k) {
    if (const auto* b = std::get_if<TwoBridgeKnot>(&k)) {
        if (b->m == 3) return b->p % 6 != 1;
        return std::nullopt;
    }
    return std::get<TwistKnot>(k).m <= 2;
}

KnotPresentation presentation(const Knot& k) {
    FreeWord w = std::holds_alternative<TwoBridgeKnot>(k) ? two_bridge_word(std::get<TwoBridgeKnot>(k))
                                                          : twist_knot_word(std::get<TwistKnot>(k));
    FreeWord r = relator_of(w);
    return {k, std::move(w), std::move(r), genus(k), is_fibered(k)};
}

IntPolynomial classical_alexander(const KnotPresentation& pres) {
    std::map<int, long long> by_exponent;
    const GroupRingElement d = fox_derivative(pres.relator, Generator::A);
    for (const auto& [u, c] : d.terms()) by_exponent[exponent_sum(u)] += c;
    std::erase_if(by_exponent, [](const auto& kv) { return kv.second == 0; });
    if (by_exponent.empty()) return {};
    const int lo = by_exponent.begin()->first;
    const int hi = by_exponent.rbegin()->first;
    std::vector<BigInt> coeffs(static_cast<std::size_t>(hi - lo) + 1, BigInt(0));
    for (const auto& [e, c] : by_exponent) coeffs[static_cast<std::size_t>(e - lo)] = c;
    IntPolynomial p(std::move(coeffs));
    return p.leading() < 0 ? -p : p;
}

}  // namespace tak
