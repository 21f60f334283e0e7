#include "tak/representations.hpp"

#include <cmath>
#include <numbers>

#include "tak/chebyshev.hpp"
#include "tak/error.hpp"
#include "tak/roots.hpp"

namespace tak {

using chebyshev::S_value;

Representation Representation::build(Complex x, Complex u, TraceCoords coords, const Tolerances& tol) {
    if (std::abs(u) < tol.reducible)
        throw ReducibleRepresentation("trace coordinates only admit an abelian representation (u = 0)");
    const Complex s = (x + std::sqrt(x * x - 4.0)) / 2.0;
    const Complex si = 1.0 / s;
    return Representation(SL2Matrix(s, 1.0, 0.0, si), SL2Matrix(s, 0.0, u, si), coords, s, u);
}

Representation Representation::from_xz(Complex x, Complex z, const Tolerances& tol) {
    return build(x, z + 2.0 - x * x, TraceCoordsPlus{x, z}, tol);
}

Representation Representation::from_xy(Complex x, Complex y, const Tolerances& tol) {
    return build(x, 2.0 - y, TraceCoordsMinus{x, y}, tol);
}

Representation Representation::conjugated(const SL2Matrix& p) const {
    const SL2Matrix pi = p.inverse();
    return Representation(p * a_ * pi, p * b_ * pi, coords_, s_, u_);
}

Complex riley_generic(const FreeWord& w, const Representation& rep) {
    const auto letters = w.spelled();
    if (letters.size() % 2 != 0) throw ParameterError("riley_generic needs an even-length word");
    const std::size_t d = letters.size() / 2;
    Complex sum = 0.0;
    double sign = 1.0;
    for (std::size_t i = 0; i < d; ++i, sign = -sign) {
        const auto inner = FreeWord::reduce(std::span(letters).subspan(i, letters.size() - 2 * i));
        sum += sign * rep.image(inner).trace();
    }
    return sum + sign;
}

Complex riley_b3_closed(int n, Complex x, Complex z) {
    const Complex sn1 = S_value(n - 1, z);
    return S_value(3 * n, z) - S_value(3 * n - 1, z) - x * x * (z - 2.0) * sn1 * sn1 * (S_value(n, z) - sn1);
}

Complex riley_even(int n, Complex x, Complex y) {
    const Complex s1 = S_value(n - 1, y);
    const Complex s0 = S_value(n, y);
    return (y + 1.0) * s1 * s1 - s0 * s0 - 2.0 * s1 * s0 + x * x * s1 * (s0 - s1);
}

Complex riley_odd(int n, Complex x, Complex y) {
    const Complex s1 = S_value(n - 1, y);
    const Complex s2 = S_value(n - 2, y);
    return -(y + 1.0) * s1 * s1 + s2 * s2 + 2.0 * s1 * s2 + x * x * s1 * (s1 - s2);
}

namespace {

using WideComplex = std::complex<long double>;

// The trace sum of riley_generic, evaluated in long double at (x, z) for root polishing.
WideComplex riley_wide(const std::vector<Letter>& letters, WideComplex x, WideComplex z) {
    using WideMat = Eigen::Matrix<WideComplex, 2, 2>;
    const WideComplex s = (x + std::sqrt(x * x - 4.0L)) / 2.0L;
    const WideComplex u = z + 2.0L - x * x;
    WideMat a, b, ia, ib;
    a << s, 1.0L, 0.0L, 1.0L / s;
    b << s, 0.0L, u, 1.0L / s;
    ia << 1.0L / s, -1.0L, 0.0L, s;
    ib << 1.0L / s, 0.0L, -u, s;
    const std::size_t d = letters.size() / 2;
    WideComplex sum = 0.0L;
    long double sign = 1.0L;
    for (std::size_t i = 0; i < d; ++i, sign = -sign) {
        WideMat m = WideMat::Identity();
        for (std::size_t k = i; k < letters.size() - i; ++k) {
            const Letter& l = letters[k];
            m = m * (l.gen == Generator::A ? (l.exponent > 0 ? a : ia) : (l.exponent > 0 ? b : ib));
        }
        sum += sign * m.trace();
    }
    return sum + sign;
}

Complex tr_ab_inverse(const Representation& rep) {
    return (rep.a().matrix() * adjugate(rep.b().matrix())).trace();
}

}  // namespace

Complex riley_value(const KnotPresentation& pres, const Representation& rep) {
    if (std::holds_alternative<TwoBridgeKnot>(pres.knot)) return riley_generic(pres.word, rep);
    const auto& k = std::get<TwistKnot>(pres.knot);
    const Complex y = tr_ab_inverse(rep);
    return k.parity() == TwistParity::Even ? riley_even(k.index(), rep.x(), y) : riley_odd(k.index(), rep.x(), y);
}

Complex boundary_coeff_b3(int n, Complex x, Complex z) {
    const Complex s = S_value(n - 1, z);
    return 4.0 + (z - 2.0) * (z + 2.0 - x * x) * s * s;
}

Complex boundary_coeff_twist(int n, Complex y) {
    // exact quotient keeps y = 2 regular
    const IntPolynomial q = divide_exact(chebyshev::T(n) - IntPolynomial{2}, IntPolynomial{-2, 1});
    return q(y);
}

double relator_residual(const Representation& rep, const FreeWord& w) {
    const Mat2 rw = rep.image(w);
    return max_abs(rw * rep.a().matrix() - rep.b().matrix() * rw);
}

std::vector<Representation> representations_at(const KnotPresentation& pres, Complex second_coord,
                                                const Tolerances& tol) {
    std::vector<Complex> xs;
    if (const auto* tk = std::get_if<TwistKnot>(&pres.knot)) {
        // linear in x^2
        const auto R = [&](Complex x) {
            return tk->parity() == TwistParity::Even ? riley_even(tk->index(), x, second_coord)
                                                     : riley_odd(tk->index(), x, second_coord);
        };
        const Complex c0 = R(0.0);
        const Complex c1 = R(1.0) - c0;
        if (std::abs(c1) < 1e-12 * std::max(1.0, std::abs(c0))) return {};
        const Complex x = std::sqrt(-c0 / c1);
        xs = dedupe({x, -x}, tol.dedupe);
    } else {
        // Riley polynomial has degree <= word length in x; recover it by interpolation on a circle.
        const std::size_t deg = pres.word.length();
        const std::size_t samples = deg + 1;
        constexpr double radius = 2.0;
        std::vector<Complex> values(samples);
        for (std::size_t k = 0; k < samples; ++k) {
            const Complex xk = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / samples);
            const Complex u = second_coord + 2.0 - xk * xk;
            if (std::abs(u) < tol.reducible) throw ParameterError("interpolation node hit the abelian locus");
            values[k] = riley_generic(pres.word, Representation::from_xz(xk, second_coord, tol));
        }
        std::vector<Complex> coeffs(samples);
        double cmax = 0.0;
        for (std::size_t j = 0; j < samples; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < samples; ++k)
                acc += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j * k) / samples);
            coeffs[j] = acc / (static_cast<double>(samples) * std::pow(radius, static_cast<double>(j)));
            cmax = std::max(cmax, std::abs(coeffs[j]));
        }
        while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-10 * cmax) coeffs.pop_back();
        if (coeffs.size() < 2) return {};
        xs = polynomial_roots(coeffs, 1e-6);
        // polish against the trace sum itself, in long double
        const auto letters = pres.word.spelled();
        const WideComplex z(second_coord.real(), second_coord.imag());
        for (auto& x : xs) {
            WideComplex w(x.real(), x.imag());
            for (int it = 0; it < 4; ++it) {
                const long double h = 1e-7L * std::max(1.0L, std::abs(w));
                const WideComplex df = (riley_wide(letters, w + h, z) - riley_wide(letters, w - h, z)) / (2.0L * h);
                if (df == 0.0L) break;
                const WideComplex step = riley_wide(letters, w, z) / df;
                if (!std::isfinite(std::abs(step))) break;
                w -= step;
            }
            x = Complex(static_cast<double>(w.real()), static_cast<double>(w.imag()));
        }
        xs = dedupe(xs, tol.dedupe);
    }
    std::vector<Representation> out;
    for (const Complex x : xs) {
        try {
            out.push_back(std::holds_alternative<TwistKnot>(pres.knot) ? Representation::from_xy(x, second_coord, tol)
                                                                        : Representation::from_xz(x, second_coord, tol));
        } catch (const ReducibleRepresentation&) {
        }
    }
    return out;
}

}  // namespace tak
