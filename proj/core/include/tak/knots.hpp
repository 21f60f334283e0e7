#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tak/group_words.hpp"
#include "tak/int_polynomial.hpp"

namespace tak {

/// The two-bridge knot b(p, m): p > m >= 1, both odd, gcd(p, m) = 1.
/// m = 1 is admitted so the trefoil b(3, 1) has a standard presentation too.
struct TwoBridgeKnot {
    int p;
    int m;

    /// Throws ParameterError on invalid parameters.
    static TwoBridgeKnot make(int p, int m);
    /// b(6n + 1, 3).
    static TwoBridgeKnot b3(int n) { return make(6 * n + 1, 3); }
    bool operator==(const TwoBridgeKnot&) const = default;
};

enum class TwistParity { Even, Odd };

/// The m-twist knot K_m, m >= 1. K_1 is the trefoil, K_2 the figure-eight.
struct TwistKnot {
    int m;

    static TwistKnot make(int m);
    /// K_{2n} for Even, K_{2n-1} for Odd.
    static TwistKnot from_index(TwistParity parity, int n);
    TwistParity parity() const { return m % 2 == 0 ? TwistParity::Even : TwistParity::Odd; }
    /// n such that m = 2n (even) or m = 2n - 1 (odd).
    int index() const { return m % 2 == 0 ? m / 2 : (m + 1) / 2; }
    bool operator==(const TwistKnot&) const = default;
};

using Knot = std::variant<TwoBridgeKnot, TwistKnot>;

/// Parses "b:p,m" or "twist:m". Throws ParameterError.
Knot parse_knot_spec(std::string_view spec);
std::string to_spec(const Knot& k);

/// w = a^e1 b^e2 ... a^e(p-2) b^e(p-1) with e_j = (-1)^floor(j m / p).
FreeWord two_bridge_word(const TwoBridgeKnot& k);

/// (b a^-1)^n b (a b^-1)^n for K_{2n}, (a b^-1)^n b (b a^-1)^n for K_{2n-1}.
FreeWord twist_knot_word(const TwistKnot& k);

/// Known only for b(6n+1, 3) (genus n) and the twist knots (genus 1).
std::optional<int> genus(const Knot& k);

/// Known for b(p, 3) (fibered iff p != 1 mod 6) and the twist knots (fibered iff m <= 2).
std::optional<bool> is_fibered(const Knot& k);

/// A one-relator presentation <a, b | wa = bw> with its metadata.
struct KnotPresentation {
    Knot knot;
    FreeWord word;
    FreeWord relator;
    std::optional<int> genus;
    std::optional<bool> fibered;

    std::string name() const { return to_spec(knot); }
};

KnotPresentation presentation(const Knot& k);

/// Classical Alexander polynomial: abelianized d r / d a, shifted to lowest exponent 0,
/// sign chosen so the leading coefficient is positive.
IntPolynomial classical_alexander(const KnotPresentation& pres);

}  // namespace tak
