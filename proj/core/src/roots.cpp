#include "tak/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "tak/error.hpp"

namespace tak {

Complex horner(std::span<const Complex> coeffs, Complex z) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

Complex horner_derivative(std::span<const Complex> coeffs, Complex z) {
    Complex acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs[k];
    return acc;
}

double evaluation_scale(std::span<const Complex> coeffs, Complex z) {
    double acc = 0.0;
    const double r = std::max(1.0, std::abs(z));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, double residual_tol) {
    if (coeffs.size() < 2 || coeffs.back() == 0.0)
        throw ParameterError("root finding needs degree >= 1 and a nonzero leading coefficient");
    const int deg = static_cast<int>(coeffs.size()) - 1;

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solver did not converge");

    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        Complex r = solver.eigenvalues()(i);
        const Complex d = horner_derivative(coeffs, r);
        if (d != 0.0) {
            const Complex polished = r - horner(coeffs, r) / d;
            if (std::abs(horner(coeffs, polished)) <= std::abs(horner(coeffs, r))) r = polished;
        }
        const double res = std::abs(horner(coeffs, r));
        const double scale = evaluation_scale(coeffs, r);
        if (res > residual_tol * scale) {
            std::ostringstream os;
            os << "root " << r << " has residual " << res << " (scale " << scale << ", degree " << deg << ")";
            throw ConvergenceError(os.str());
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](Complex l, Complex r) {
        return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
    });
    return out;
}

std::vector<Complex> roots(const IntPolynomial& p, double residual_tol) {
    const auto c = p.to_complex();
    return polynomial_roots(c, residual_tol);
}

std::vector<Complex> dedupe(const std::vector<Complex>& values, double tol) {
    std::vector<Complex> out;
    for (const auto& v : values)
        if (std::none_of(out.begin(), out.end(), [&](Complex o) { return std::abs(o - v) < tol; })) out.push_back(v);
    return out;
}

}  // namespace tak
