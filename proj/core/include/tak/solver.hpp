#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tak/int_polynomial.hpp"
#include "tak/knots.hpp"
#include "tak/representations.hpp"
#include "tak/tolerances.hpp"
#include "tak/twisted_alexander.hpp"

namespace tak {

enum class Family { B3, TwistEven, TwistOdd };
enum class Mode { Deficient, Monic };

std::string to_string(Family f);
std::string to_string(Mode m);
/// "b3", "twist-even", "twist-odd". Throws ParameterError.
Family parse_family(std::string_view s);
/// "deficient", "monic". Throws ParameterError.
Mode parse_mode(std::string_view s);

/// The knot a family member refers to: b(6n+1, 3), K_{2n} or K_{2n-1}.
Knot family_knot(Family f, int n);

/// One of the polynomial systems whose solutions are the exceptional representations.
struct ExceptionalSystem {
    Family family;
    int n;
    Mode mode;

    /// n >= 1 for B3, n >= 2 for the twist families. Throws ParameterError.
    static ExceptionalSystem make(Family family, int n, Mode mode);
};

/// One exceptional representation, independently re-verified.
struct WitnessReport {
    Family family = Family::B3;
    int n = 0;
    Mode mode = Mode::Deficient;
    TraceCoords coords;
    double riley_residual = 0.0;
    Complex boundary_value;
    std::optional<DeltaReport> delta;
    /// Number of raw solutions merged into this witness by deduplication.
    int multiplicity = 1;
    bool verified = false;
    /// x within dedupe tolerance of -2 (reported, never a failure).
    bool x_near_minus_two = false;
    std::vector<std::string> issues;
};

struct CountResult {
    Family family = Family::B3;
    int n = 0;
    Mode mode = Mode::Deficient;
    int found_count = 0;
    int theorem_count = 0;
    std::vector<WitnessReport> witnesses;
    bool all_verified = false;

    bool counts_match() const { return found_count == theorem_count; }
    bool ok() const { return counts_match() && all_verified; }
};

/// S_{3n} - S_{3n-1} - (4 + (z^2 - 4) S_{n-1}^2)(S_n - S_{n-1}).
IntPolynomial h1_poly(int n);
/// S_{3n} - S_{3n-1} - (3 + (z^2 - 4) S_{n-1}^2)(S_n - S_{n-1}).
IntPolynomial h3_poly(int n);
/// (T_n(y) - 2)/(y - 2) for Deficient, (T_n(y) - y)/(y - 2) for Monic.
IntPolynomial twist_boundary_poly(int n, Mode mode);

/// Deficient: z runs over the roots of h1 and 9x^2 = z - 2. Monic: roots of h3 and 4x^2 = z + 2.
std::vector<WitnessReport> solve_b3(int n, Mode mode, const Tolerances& tol = {});

/// y runs over the distinct roots of twist_boundary_poly; the Riley polynomial is then
/// linear in x^2 and is solved directly, with its degenerate cases.
std::vector<WitnessReport> solve_twist(TwistParity parity, int n, Mode mode, const Tolerances& tol = {});

std::vector<WitnessReport> solve(const ExceptionalSystem& sys, const Tolerances& tol = {});

/// Indicator corrections of the twist-knot monic counts.
struct Corrections {
    int a = 0;  ///< 2 if n = 1 mod 6
    int b = 0;  ///< 2 if n = 1 mod 5
    int c = 0;  ///< 1 if n = 1 mod 3
    int d = 0;  ///< 2 if n = 5 mod 6
    int e = 0;  ///< 2 if n = 4 mod 5
    bool operator==(const Corrections&) const = default;
};

Corrections correction_terms(int n);

/// Closed-form count of exceptional representations for a family member.
int theorem_count(Family family, int n, Mode mode);

struct CensusOptions {
    Tolerances tol;
    /// Worker threads; 0 or 1 runs inline.
    unsigned threads = 1;
};

/// Solves and verifies every (n, mode) pair for n in [n_lo, n_hi]. Ordered by n, then mode
/// in the order given, independent of threading.
std::vector<CountResult> census(Family family, int n_lo, int n_hi, const std::vector<Mode>& modes,
                                const CensusOptions& opts = {});

}  // namespace tak
