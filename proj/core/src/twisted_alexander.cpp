#include "tak/twisted_alexander.hpp"

#include <cmath>
#include <sstream>

#include "tak/error.hpp"

namespace tak {

namespace {

void require_representation(const KnotPresentation& pres, const Representation& rep, const Tolerances& tol,
                            double& residual) {
    if (!rep.nonabelian(tol.reducible))
        throw ReducibleRepresentation("twisted Alexander polynomial needs a nonabelian representation");
    residual = relator_residual(rep, pres.word);
    if (residual >= tol.relator) {
        std::ostringstream os;
        os << "matrices do not satisfy wa = bw for " << pres.name() << " (relator residual " << residual << ")";
        throw NotARepresentation(os.str());
    }
}

ComplexLaurentPoly one_minus(const SL2Matrix& g, double zero_tol) {
    const MatrixLaurentPoly m = MatrixLaurentPoly::identity() - MatrixLaurentPoly::monomial(1, g.matrix());
    return det(m, zero_tol);
}

}  // namespace

ComplexLaurentPoly fox_numerator(const KnotPresentation& pres, const Representation& rep, Generator g,
                                 const Tolerances& tol) {
    return det_phi(fox_derivative(pres.relator, g), rep.a(), rep.b(), tol.zero);
}

DeltaReport twisted_alexander(const KnotPresentation& pres, const Representation& rep, const Tolerances& tol) {
    DeltaReport r;
    require_representation(pres, rep, tol, r.relator_residual);

    const ComplexLaurentPoly num = fox_numerator(pres, rep, Generator::A, tol);
    const ComplexLaurentPoly den = one_minus(rep.b(), tol.zero);
    if (num.is_zero()) throw NotDivisible("Fox numerator vanished identically");
    const Division q = divide_exact(num, den, tol.division, tol.zero);

    r.knot = pres.name();
    r.coords = rep.coords();
    r.delta = q.quotient.canonical();
    r.division_remainder = q.relative_remainder;
    r.span = r.delta.span();
    r.leading = r.delta.leading();
    r.trailing = r.delta.trailing();
    r.monic = std::abs(r.leading - 1.0) < tol.monic;
    if (pres.genus) {
        r.genus_bound = 4 * *pres.genus - 2;
        r.deficient = r.span < *r.genus_bound;
    }
    return r;
}

bool wada_welldefined_check(const KnotPresentation& pres, const Representation& rep, const Tolerances& tol) {
    const ComplexLaurentPoly da = one_minus(rep.a(), tol.zero);
    const ComplexLaurentPoly db = one_minus(rep.b(), tol.zero);
    if (da.is_zero() || db.is_zero()) return false;
    try {
        const auto qa = divide_exact(fox_numerator(pres, rep, Generator::A, tol), db, tol.division, tol.zero);
        const auto qb = divide_exact(fox_numerator(pres, rep, Generator::B, tol), da, tol.division, tol.zero);
        const auto ca = qa.quotient.canonical();
        const auto cb = qb.quotient.canonical();
        if (ca.is_zero() || cb.is_zero()) return ca.is_zero() && cb.is_zero();
        return distance(ca, cb) <= 1e-8 * std::max(ca.max_norm(), cb.max_norm());
    } catch (const NotDivisible&) {
        return false;
    }
}

}  // namespace tak
