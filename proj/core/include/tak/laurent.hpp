#pragma once

#include <map>
#include <vector>

#include "tak/group_words.hpp"
#include "tak/matrix.hpp"

namespace tak {

/// Laurent polynomial in t with complex coefficients, stored densely from min_exp.
/// Construction drops coefficients of magnitude <= zero_tolerance * (largest magnitude),
/// then trims both ends, so the end coefficients are always nonzero.
class ComplexLaurentPoly {
public:
    ComplexLaurentPoly() = default;
    ComplexLaurentPoly(int min_exp, std::vector<Complex> coeffs, double zero_tolerance = 0.0);
    ComplexLaurentPoly(const std::map<int, Complex>& coeffs, double zero_tolerance = 0.0);
    static ComplexLaurentPoly monomial(int exp, Complex c = 1.0);

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const { return min_exp_; }
    /// Meaningful only when nonzero.
    int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    double zero_tolerance() const { return zero_tolerance_; }
    Complex coefficient(int exp) const;

    /// max - min exponent. Throws ZeroPolynomial.
    int span() const;
    /// Coefficient at the top exponent. Throws ZeroPolynomial.
    Complex leading() const;
    /// Coefficient at the bottom exponent. Throws ZeroPolynomial.
    Complex trailing() const;
    double max_norm() const;

    /// Shifted so that the minimum exponent is 0.
    ComplexLaurentPoly canonical() const;
    ComplexLaurentPoly shifted(int by) const;
    /// Re-applies the zero threshold.
    ComplexLaurentPoly cleaned(double zero_tolerance) const;
    Complex operator()(Complex t) const;

    friend ComplexLaurentPoly operator+(const ComplexLaurentPoly& l, const ComplexLaurentPoly& r);
    friend ComplexLaurentPoly operator-(const ComplexLaurentPoly& l, const ComplexLaurentPoly& r);
    friend ComplexLaurentPoly operator*(const ComplexLaurentPoly& l, const ComplexLaurentPoly& r);
    friend ComplexLaurentPoly operator*(Complex c, const ComplexLaurentPoly& p);

private:
    void normalize();

    int min_exp_ = 0;
    std::vector<Complex> coeffs_;
    double zero_tolerance_ = 0.0;
};

/// Max-norm distance between coefficient vectors.
double distance(const ComplexLaurentPoly& l, const ComplexLaurentPoly& r);

/// Laurent polynomial in t with 2x2 complex matrix coefficients.
class MatrixLaurentPoly {
public:
    MatrixLaurentPoly() = default;
    MatrixLaurentPoly(int min_exp, std::vector<Mat2> coeffs);
    static MatrixLaurentPoly monomial(int exp, const Mat2& m);
    static MatrixLaurentPoly identity() { return monomial(0, Mat2::Identity()); }

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const { return min_exp_; }
    int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Mat2>& coeffs() const { return coeffs_; }
    Mat2 coefficient(int exp) const;
    Mat2 operator()(Complex t) const;

    MatrixLaurentPoly& operator+=(const MatrixLaurentPoly& o);
    friend MatrixLaurentPoly operator+(MatrixLaurentPoly l, const MatrixLaurentPoly& r) { return l += r; }
    friend MatrixLaurentPoly operator-(const MatrixLaurentPoly& l, const MatrixLaurentPoly& r);
    friend MatrixLaurentPoly operator*(const MatrixLaurentPoly& l, const MatrixLaurentPoly& r);
    friend MatrixLaurentPoly operator*(Complex c, const MatrixLaurentPoly& p);

private:
    void normalize();

    int min_exp_ = 0;
    std::vector<Mat2> coeffs_;
};

/// Image of a word under a -> ma, b -> mb (inverses via adjugate).
Mat2 word_image(const FreeWord& w, const Mat2& ma, const Mat2& mb);

/// The ring map Z[F2] -> M(2, C[t^{+-1}]) sending a word u to t^{exponent_sum(u)} rho(u).
MatrixLaurentPoly phi(const GroupRingElement& elem, const SL2Matrix& a, const SL2Matrix& b);

/// 2x2 determinant over C[t^{+-1}], cleaned with the given relative tolerance.
ComplexLaurentPoly det(const MatrixLaurentPoly& m, double zero_tolerance = 0.0);

/// det phi(elem), accumulated in long double and rounded at the end. Images with large
/// entries lose most of their digits to cancellation in the determinant otherwise.
ComplexLaurentPoly det_phi(const GroupRingElement& elem, const SL2Matrix& a, const SL2Matrix& b,
                           double zero_tolerance = 0.0);

struct Division {
    ComplexLaurentPoly quotient;
    /// Max-norm of num - quotient * den, relative to max-norm of num.
    double relative_remainder;
};

/// Long division num / den. Throws NotDivisible when the relative remainder exceeds
/// division_tolerance, ZeroPolynomial when den is zero.
Division divide_exact(const ComplexLaurentPoly& num, const ComplexLaurentPoly& den,
                      double division_tolerance = 1e-8, double zero_tolerance = 1e-9);

}  // namespace tak
