#pragma once

#include <complex>

#include <Eigen/Core>

namespace tak {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

inline Complex det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// Largest entry magnitude.
double max_abs(const Mat2& m);

/// Inverse through the adjugate; exact for unimodular input.
Mat2 adjugate(const Mat2& m);

/// A 2x2 complex matrix with determinant 1 (checked at construction).
class SL2Matrix {
public:
    static constexpr double kDetTolerance = 1e-9;

    SL2Matrix() : m_(Mat2::Identity()) {}
    /// Throws ParameterError when |det - 1| >= kDetTolerance.
    explicit SL2Matrix(const Mat2& m);
    SL2Matrix(Complex a, Complex b, Complex c, Complex d);

    static SL2Matrix identity() { return SL2Matrix(); }

    const Mat2& matrix() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }
    Complex trace() const { return m_.trace(); }
    SL2Matrix inverse() const;

    friend SL2Matrix operator*(const SL2Matrix& l, const SL2Matrix& r);

private:
    struct Unchecked {};
    SL2Matrix(const Mat2& m, Unchecked) : m_(m) {}

    Mat2 m_;
};

}  // namespace tak
