#pragma once

#include <optional>
#include <string>

#include "tak/knots.hpp"
#include "tak/laurent.hpp"
#include "tak/representations.hpp"
#include "tak/tolerances.hpp"

namespace tak {

/// The twisted Alexander polynomial of one representation, with its classification.
struct DeltaReport {
    std::string knot;
    TraceCoords coords;
    /// Canonical form, lowest exponent 0.
    ComplexLaurentPoly delta;
    int span = 0;
    Complex leading;
    Complex trailing;
    /// |leading - 1| < monic tolerance.
    bool monic = false;
    /// span < 4g - 2; empty when the genus is unknown.
    std::optional<bool> deficient;
    /// 4g - 2; empty when the genus is unknown.
    std::optional<int> genus_bound;
    double division_remainder = 0.0;
    double relator_residual = 0.0;
};

/// det Phi(d r / d g), cleaned with tol.zero.
ComplexLaurentPoly fox_numerator(const KnotPresentation& pres, const Representation& rep, Generator g,
                                 const Tolerances& tol = {});

/// Delta = det Phi(d r / d a) / det Phi(1 - b), canonicalized and classified.
/// Throws ReducibleRepresentation for abelian rep, NotARepresentation when the relator
/// residual is at least tol.relator, NotDivisible when the division leaves a remainder.
DeltaReport twisted_alexander(const KnotPresentation& pres, const Representation& rep, const Tolerances& tol = {});

/// Both Wada quotients (removing column a or column b) agree after canonical shift,
/// to 1e-8 relative.
bool wada_welldefined_check(const KnotPresentation& pres, const Representation& rep, const Tolerances& tol = {});

}  // namespace tak
