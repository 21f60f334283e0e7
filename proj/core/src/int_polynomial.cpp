#include "tak/int_polynomial.hpp"

#include <sstream>
#include <utility>

#include <boost/integer/common_factor_rt.hpp>

#include "tak/error.hpp"

namespace tak {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(int k, const BigInt& c) {
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1, BigInt(0));
    v.back() = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::operator()(const BigInt& z) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex IntPolynomial::operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + it->convert_to<double>();
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
    return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::integer::gcd(g, c);
    return abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    BigInt c = content();
    if (leading() < 0) c = -c;
    std::vector<BigInt> v = coeffs_;
    for (auto& x : v) x /= c;
    return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

IntPolynomial operator-(const IntPolynomial& p) { return BigInt(-1) * p; }

IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<BigInt> v(l.coeffs_.size() + r.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) v[i + j] += l.coeffs_[i] * r.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
    std::vector<BigInt> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return IntPolynomial(std::move(v));
}

std::vector<Complex> IntPolynomial::to_complex() const {
    std::vector<Complex> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.emplace_back(c.convert_to<double>(), 0.0);
    return v;
}

std::string IntPolynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        BigInt c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (c != 1 || k == 0) os << c;
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const BigInt lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        const BigInt la = a.leading();
        a = lb * a - la * (IntPolynomial::monomial(shift) * b);
    }
    return a;
}

}  // namespace

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree()) throw NotDivisible("degree of divisor exceeds dividend");
    std::vector<BigInt> rem = num.coefficients();
    std::vector<BigInt> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1, BigInt(0));
    const auto& d = den.coefficients();
    const BigInt ld = den.leading();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        const BigInt& top = rem[static_cast<std::size_t>(k + den.degree())];
        if (top % ld != 0) throw NotDivisible("quotient is not integral");
        const BigInt c = top / ld;
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= c * d[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw NotDivisible("nonzero remainder in exact integer division");
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.degree() < 1) return p;
    const IntPolynomial g = gcd(p, p.derivative());
    return divide_exact(p.primitive_part(), g);
}

}  // namespace tak
