#pragma once

#include <variant>
#include <vector>

#include "tak/group_words.hpp"
#include "tak/knots.hpp"
#include "tak/laurent.hpp"
#include "tak/matrix.hpp"
#include "tak/tolerances.hpp"

namespace tak {

/// x = tr rho(a) = tr rho(b), z = tr rho(ab).
struct TraceCoordsPlus {
    Complex x;
    Complex z;
};

/// x = tr rho(a) = tr rho(b), y = tr rho(ab^-1).
struct TraceCoordsMinus {
    Complex x;
    Complex y;
};

using TraceCoords = std::variant<TraceCoordsPlus, TraceCoordsMinus>;

inline Complex x_of(const TraceCoords& c) {
    return std::visit([](const auto& v) { return v.x; }, c);
}

/// rho(a) = [[s, 1], [0, 1/s]], rho(b) = [[s, 0], [u, 1/s]] with s + 1/s = x.
/// Then tr rho(ab) = x^2 - 2 + u and tr rho(ab^-1) = 2 - u.
class Representation {
public:
    /// u = z + 2 - x^2. Throws ReducibleRepresentation when |u| < tol.reducible.
    static Representation from_xz(Complex x, Complex z, const Tolerances& tol = {});
    /// u = 2 - y. Throws ReducibleRepresentation when |u| < tol.reducible.
    static Representation from_xy(Complex x, Complex y, const Tolerances& tol = {});

    const SL2Matrix& a() const { return a_; }
    const SL2Matrix& b() const { return b_; }
    const TraceCoords& coords() const { return coords_; }
    Complex x() const { return x_of(coords_); }
    Complex s() const { return s_; }
    Complex u() const { return u_; }
    bool nonabelian(double tol = 1e-9) const { return std::abs(u_) >= tol; }

    /// (P A P^-1, P B P^-1) with the same coordinates.
    Representation conjugated(const SL2Matrix& p) const;

    Mat2 image(const FreeWord& w) const { return word_image(w, a_.matrix(), b_.matrix()); }

private:
    Representation(SL2Matrix a, SL2Matrix b, TraceCoords coords, Complex s, Complex u)
        : a_(std::move(a)), b_(std::move(b)), coords_(coords), s_(s), u_(u) {}
    static Representation build(Complex x, Complex u, TraceCoords coords, const Tolerances& tol);

    SL2Matrix a_;
    SL2Matrix b_;
    TraceCoords coords_;
    Complex s_;
    Complex u_;
};

inline MatrixLaurentPoly phi(const GroupRingElement& elem, const Representation& rep) {
    return phi(elem, rep.a(), rep.b());
}

/// tr w - tr w' + ... + (-1)^(d-1) tr w^(d-1) + (-1)^d, d = length/2, where u' drops the
/// first and last unit letters of u. Throws ParameterError on odd length.
Complex riley_generic(const FreeWord& w, const Representation& rep);

/// Closed Riley polynomial of b(6n+1, 3) in (x, z).
Complex riley_b3_closed(int n, Complex x, Complex z);
/// Closed Riley polynomials of K_{2n} and K_{2n-1} in (x, y).
Complex riley_even(int n, Complex x, Complex y);
Complex riley_odd(int n, Complex x, Complex y);

/// Riley value appropriate to a presentation: the alternating trace sum for two-bridge
/// words, the closed form in y = tr rho(ab^-1) for twist knots.
Complex riley_value(const KnotPresentation& pres, const Representation& rep);

/// 4 + (z - 2)(z + 2 - x^2) S_{n-1}(z)^2.
Complex boundary_coeff_b3(int n, Complex x, Complex z);
/// (T_n(y) - 2)/(y - 2), with the value n^2 at y = 2.
Complex boundary_coeff_twist(int n, Complex y);

/// Max-entry magnitude of rho(w) rho(a) - rho(b) rho(w).
double relator_residual(const Representation& rep, const FreeWord& w);

/// Every nonabelian representation of pres with the given second coordinate (z for two-bridge,
/// y for twist knots), found as the x-roots of the Riley polynomial.
std::vector<Representation> representations_at(const KnotPresentation& pres, Complex second_coord,
                                                const Tolerances& tol = {});

}  // namespace tak
