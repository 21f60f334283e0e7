#pragma once

#include <span>
#include <vector>

#include "tak/int_polynomial.hpp"
#include "tak/matrix.hpp"

namespace tak {

/// All complex roots of sum_k coeffs[k] z^k via companion-matrix eigenvalues and one
/// Newton polish step. Every root satisfies |p(r)| < residual_tol * sum_k |c_k| max(1, |r|)^k;
/// otherwise ConvergenceError. Sorted by real part, then imaginary part.
/// Requires degree >= 1 with a nonzero leading coefficient (ParameterError otherwise).
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, double residual_tol = 1e-8);

std::vector<Complex> roots(const IntPolynomial& p, double residual_tol = 1e-8);

/// Collapses values closer than tol to the first representative; keeps order.
std::vector<Complex> dedupe(const std::vector<Complex>& values, double tol);

/// Horner evaluation for ascending complex coefficients.
Complex horner(std::span<const Complex> coeffs, Complex z);

}  // namespace tak
