#pragma once

#include <optional>

#include "tak/int_polynomial.hpp"
#include "tak/matrix.hpp"

namespace tak::chebyshev {

/// S_j: S_0 = 1, S_1 = z, S_{j+1} = z S_j - S_{j-1}, extended to all integers j
/// (S_{-1} = 0, S_{-2} = -1, ...).
IntPolynomial S(int j);

/// T_j: T_0 = 2, T_1 = z, same recurrence; T_{-j} = T_j.
IntPolynomial T(int j);

/// Horner evaluation of an exact polynomial.
inline Complex eval(const IntPolynomial& p, Complex z) { return p(z); }

/// S_j(z) by running the three-term recurrence numerically.
Complex S_value(int j, Complex z);
Complex T_value(int j, Complex z);

/// M^j = S_{j-1}(z) M - S_{j-2}(z) I, with z = tr M unless given.
/// Throws ParameterError when |det M - 1| is not small.
Mat2 sl2_power(const Mat2& m, int j, std::optional<Complex> z = std::nullopt);

}  // namespace tak::chebyshev
