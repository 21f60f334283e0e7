#include "tak/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "tak/error.hpp"

namespace tak {

double max_abs(const Mat2& m) {
    double r = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

Mat2 adjugate(const Mat2& m) {
    Mat2 r;
    r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return r;
}

SL2Matrix::SL2Matrix(const Mat2& m) : m_(m) {
    if (std::abs(det2(m) - 1.0) >= kDetTolerance)
        throw ParameterError("matrix is not unimodular: |det - 1| = " +
                             std::to_string(std::abs(det2(m) - 1.0)));
}

SL2Matrix::SL2Matrix(Complex a, Complex b, Complex c, Complex d)
    : SL2Matrix((Mat2() << a, b, c, d).finished()) {}

SL2Matrix SL2Matrix::inverse() const { return SL2Matrix(adjugate(m_), Unchecked{}); }

SL2Matrix operator*(const SL2Matrix& l, const SL2Matrix& r) {
    return SL2Matrix(l.m_ * r.m_, SL2Matrix::Unchecked{});
}

}  // namespace tak
