#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tak/matrix.hpp"

namespace tak {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Index is degree; the top coefficient is never zero (the zero polynomial is empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial constant(const BigInt& c);
    /// The monomial c * z^k.
    static IntPolynomial monomial(int k, const BigInt& c = 1);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coefficient(int k) const;
    BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

    BigInt operator()(const BigInt& z) const;
    /// Horner evaluation at a complex point.
    Complex operator()(Complex z) const;

    IntPolynomial derivative() const;
    /// Gcd of the coefficients (positive), 0 for the zero polynomial.
    BigInt content() const;
    /// Divided by content, sign fixed so the leading coefficient is positive.
    IntPolynomial primitive_part() const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial l, const IntPolynomial& r) { return l += r; }
    friend IntPolynomial operator-(IntPolynomial l, const IntPolynomial& r) { return l -= r; }
    friend IntPolynomial operator-(const IntPolynomial& p);
    friend IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r);
    friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
    bool operator==(const IntPolynomial&) const = default;

    std::vector<Complex> to_complex() const;
    std::string to_string(char var = 'z') const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Exact quotient over Z; throws NotDivisible when the remainder is nonzero
/// or a quotient coefficient is not integral.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

/// Primitive gcd over Z[z] (positive leading coefficient).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'): same roots, each simple.
IntPolynomial squarefree_part(const IntPolynomial& p);

}  // namespace tak
