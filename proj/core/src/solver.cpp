#include "tak/solver.hpp"

#include <cmath>
#include <sstream>

#include "tak/chebyshev.hpp"
#include "tak/error.hpp"
#include "tak/roots.hpp"

namespace tak {

using chebyshev::S;
using chebyshev::T;

std::string to_string(Family f) {
    switch (f) {
        case Family::B3: return "b3";
        case Family::TwistEven: return "twist-even";
        case Family::TwistOdd: return "twist-odd";
    }
    return "?";
}

std::string to_string(Mode m) { return m == Mode::Deficient ? "deficient" : "monic"; }

Family parse_family(std::string_view s) {
    if (s == "b3") return Family::B3;
    if (s == "twist-even") return Family::TwistEven;
    if (s == "twist-odd") return Family::TwistOdd;
    throw ParameterError("unknown family '" + std::string(s) + "'");
}

Mode parse_mode(std::string_view s) {
    if (s == "deficient") return Mode::Deficient;
    if (s == "monic") return Mode::Monic;
    throw ParameterError("unknown mode '" + std::string(s) + "'");
}

Knot family_knot(Family f, int n) {
    switch (f) {
        case Family::B3: return TwoBridgeKnot::b3(n);
        case Family::TwistEven: return TwistKnot::from_index(TwistParity::Even, n);
        case Family::TwistOdd: return TwistKnot::from_index(TwistParity::Odd, n);
    }
    throw ParameterError("unknown family");
}

ExceptionalSystem ExceptionalSystem::make(Family family, int n, Mode mode) {
    const int min_n = family == Family::B3 ? 1 : 2;
    if (n < min_n)
        throw ParameterError(to_string(family) + " needs n >= " + std::to_string(min_n) + ", got " +
                             std::to_string(n));
    return {family, n, mode};
}

namespace {

const IntPolynomial kZ{0, 1};

IntPolynomial h_poly(int n, long long constant) {
    const IntPolynomial sn1 = S(n - 1);
    const IntPolynomial bracket = IntPolynomial{constant} + (kZ * kZ - IntPolynomial{4}) * sn1 * sn1;
    return S(3 * n) - S(3 * n - 1) - bracket * (S(n) - sn1);
}

constexpr double kRileyTolerance = 1e-8;
constexpr double kBoundaryTolerance = 1e-7;

void verify(WitnessReport& w, const KnotPresentation& pres, const Representation& rep, const Tolerances& tol) {
    const Complex target = w.mode == Mode::Deficient ? 0.0 : 1.0;
    w.riley_residual = std::abs(riley_value(pres, rep));
    if (w.riley_residual >= kRileyTolerance) {
        std::ostringstream os;
        os << "riley residual " << w.riley_residual;
        w.issues.push_back(os.str());
    }
    if (std::abs(w.boundary_value - target) >= kBoundaryTolerance) {
        std::ostringstream os;
        os << "boundary coefficient " << w.boundary_value << " differs from " << target.real();
        w.issues.push_back(os.str());
    }
    try {
        w.delta = twisted_alexander(pres, rep, tol);
        const auto& d = *w.delta;
        if (!d.deficient.has_value()) w.issues.push_back("genus unknown; deficiency undecidable");
        const bool deficient = d.deficient.value_or(false);
        if (w.mode == Mode::Deficient && !deficient)
            w.issues.push_back("delta span " + std::to_string(d.span) + " is not below the genus bound");
        if (w.mode == Mode::Monic && !(d.monic && d.deficient == false)) {
            std::ostringstream os;
            os << "delta not monic of full span (leading " << d.leading << ", span " << d.span << ")";
            w.issues.push_back(os.str());
        }
    } catch (const Error& e) {
        w.issues.push_back(std::string("delta failed: ") + e.what());
    }
    if (w.family == Family::B3) {
        const Complex x = rep.x();
        if (std::abs(x - 2.0) < tol.dedupe) w.issues.push_back("parabolic witness with x = 2");
        w.x_near_minus_two = std::abs(x + 2.0) < tol.dedupe;
    }
    w.verified = w.issues.empty();
}

struct RawPoint {
    Complex x;
    Complex second;
};

// Collapses coordinates within tol and counts how many raw points each witness absorbed.
std::vector<std::pair<RawPoint, int>> dedupe_points(const std::vector<RawPoint>& raw, double tol) {
    std::vector<std::pair<RawPoint, int>> out;
    for (const auto& p : raw) {
        bool merged = false;
        for (auto& [q, mult] : out) {
            if (std::abs(q.x - p.x) < tol && std::abs(q.second - p.second) < tol) {
                ++mult;
                merged = true;
                break;
            }
        }
        if (!merged) out.emplace_back(p, 1);
    }
    return out;
}

// +-sqrt(x2), or the single value 0 when x2 vanishes.
std::vector<Complex> signed_roots(Complex x2, double tol) {
    if (std::abs(x2) < tol) return {0.0, 0.0};
    const Complex x = std::sqrt(x2);
    return {x, -x};
}

}  // namespace

IntPolynomial h1_poly(int n) { return h_poly(n, 4); }
IntPolynomial h3_poly(int n) { return h_poly(n, 3); }

IntPolynomial twist_boundary_poly(int n, Mode mode) {
    const IntPolynomial num = mode == Mode::Deficient ? T(n) - IntPolynomial{2} : T(n) - kZ;
    return divide_exact(num, IntPolynomial{-2, 1});
}

std::vector<WitnessReport> solve_b3(int n, Mode mode, const Tolerances& tol) {
    const auto sys = ExceptionalSystem::make(Family::B3, n, mode);
    const KnotPresentation pres = presentation(family_knot(Family::B3, n));
    const IntPolynomial h = mode == Mode::Deficient ? h1_poly(n) : h3_poly(n);

    std::vector<RawPoint> raw;
    for (const Complex z : dedupe(roots(h), tol.dedupe)) {
        const Complex x2 = mode == Mode::Deficient ? (z - 2.0) / 9.0 : (z + 2.0) / 4.0;
        for (const Complex x : signed_roots(x2, tol.dedupe * tol.dedupe)) raw.push_back({x, z});
    }

    std::vector<WitnessReport> out;
    for (const auto& [p, mult] : dedupe_points(raw, tol.dedupe)) {
        WitnessReport w;
        w.family = sys.family;
        w.n = n;
        w.mode = mode;
        w.coords = TraceCoordsPlus{p.x, p.second};
        w.multiplicity = mult;
        w.boundary_value = boundary_coeff_b3(n, p.x, p.second);
        try {
            verify(w, pres, Representation::from_xz(p.x, p.second, tol), tol);
        } catch (const ReducibleRepresentation& e) {
            w.issues.push_back(e.what());
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<WitnessReport> solve_twist(TwistParity parity, int n, Mode mode, const Tolerances& tol) {
    const Family family = parity == TwistParity::Even ? Family::TwistEven : Family::TwistOdd;
    const auto sys = ExceptionalSystem::make(family, n, mode);
    const KnotPresentation pres = presentation(family_knot(family, n));
    const auto riley = [&](Complex x, Complex y) {
        return parity == TwistParity::Even ? riley_even(n, x, y) : riley_odd(n, x, y);
    };

    const IntPolynomial q = squarefree_part(twist_boundary_poly(n, mode));
    const std::vector<Complex> ys = q.degree() >= 1 ? dedupe(roots(q), tol.dedupe) : std::vector<Complex>{};

    std::vector<RawPoint> raw;
    for (const Complex y : ys) {
        // Riley = c0 + c1 x^2
        const Complex c0 = riley(0.0, y);
        const Complex c1 = riley(1.0, y) - c0;
        const double scale = std::max(1.0, std::abs(c0));
        if (std::abs(c1) < 1e-9 * scale) {
            if (std::abs(c0) < 1e-9) {
                std::ostringstream os;
                os << "Riley polynomial vanishes identically in x at y = " << y << "; solution set is not finite";
                throw Error(os.str());
            }
            continue;
        }
        for (const Complex x : signed_roots(-c0 / c1, tol.dedupe * tol.dedupe)) raw.push_back({x, y});
    }

    std::vector<WitnessReport> out;
    for (const auto& [p, mult] : dedupe_points(raw, tol.dedupe)) {
        WitnessReport w;
        w.family = sys.family;
        w.n = n;
        w.mode = mode;
        w.coords = TraceCoordsMinus{p.x, p.second};
        w.multiplicity = mult;
        w.boundary_value = boundary_coeff_twist(n, p.second);
        try {
            verify(w, pres, Representation::from_xy(p.x, p.second, tol), tol);
        } catch (const ReducibleRepresentation& e) {
            w.issues.push_back(e.what());
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<WitnessReport> solve(const ExceptionalSystem& sys, const Tolerances& tol) {
    switch (sys.family) {
        case Family::B3: return solve_b3(sys.n, sys.mode, tol);
        case Family::TwistEven: return solve_twist(TwistParity::Even, sys.n, sys.mode, tol);
        case Family::TwistOdd: return solve_twist(TwistParity::Odd, sys.n, sys.mode, tol);
    }
    return {};
}

}  // namespace tak
