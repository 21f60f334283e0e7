#include "tak/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tak/error.hpp"

namespace tak {

ComplexLaurentPoly::ComplexLaurentPoly(int min_exp, std::vector<Complex> coeffs, double zero_tolerance)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)), zero_tolerance_(zero_tolerance) {
    normalize();
}

ComplexLaurentPoly::ComplexLaurentPoly(const std::map<int, Complex>& coeffs, double zero_tolerance)
    : zero_tolerance_(zero_tolerance) {
    if (!coeffs.empty()) {
        min_exp_ = coeffs.begin()->first;
        coeffs_.assign(static_cast<std::size_t>(coeffs.rbegin()->first - min_exp_) + 1, 0.0);
        for (const auto& [e, c] : coeffs) coeffs_[static_cast<std::size_t>(e - min_exp_)] += c;
    }
    normalize();
}

ComplexLaurentPoly ComplexLaurentPoly::monomial(int exp, Complex c) { return ComplexLaurentPoly(exp, {c}); }

void ComplexLaurentPoly::normalize() {
    const double cutoff = zero_tolerance_ * max_norm();
    for (auto& c : coeffs_)
        if (std::abs(c) <= cutoff) c = 0.0;
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c != 0.0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    min_exp_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == 0.0) coeffs_.pop_back();
}

Complex ComplexLaurentPoly::coefficient(int exp) const {
    if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0.0;
    return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

int ComplexLaurentPoly::span() const {
    if (is_zero()) throw ZeroPolynomial("span of the zero Laurent polynomial");
    return max_exp() - min_exp_;
}

Complex ComplexLaurentPoly::leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero Laurent polynomial");
    return coeffs_.back();
}

Complex ComplexLaurentPoly::trailing() const {
    if (is_zero()) throw ZeroPolynomial("trailing coefficient of the zero Laurent polynomial");
    return coeffs_.front();
}

double ComplexLaurentPoly::max_norm() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

ComplexLaurentPoly ComplexLaurentPoly::canonical() const { return shifted(-min_exp_); }

ComplexLaurentPoly ComplexLaurentPoly::shifted(int by) const {
    ComplexLaurentPoly p = *this;
    if (!p.is_zero()) p.min_exp_ += by;
    return p;
}

ComplexLaurentPoly ComplexLaurentPoly::cleaned(double zero_tolerance) const {
    return ComplexLaurentPoly(min_exp_, coeffs_, zero_tolerance);
}

Complex ComplexLaurentPoly::operator()(Complex t) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc * std::pow(t, min_exp_);
}

namespace {

template <typename Coeff>
std::map<int, Coeff> as_map(int min_exp, const std::vector<Coeff>& v) {
    std::map<int, Coeff> m;
    for (std::size_t i = 0; i < v.size(); ++i) m.emplace(min_exp + static_cast<int>(i), v[i]);
    return m;
}

}  // namespace

ComplexLaurentPoly operator+(const ComplexLaurentPoly& l, const ComplexLaurentPoly& r) {
    auto m = as_map(l.min_exp_, l.coeffs_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) m[r.min_exp_ + static_cast<int>(i)] += r.coeffs_[i];
    return ComplexLaurentPoly(m);
}

ComplexLaurentPoly operator-(const ComplexLaurentPoly& l, const ComplexLaurentPoly& r) {
    return l + Complex(-1.0) * r;
}

ComplexLaurentPoly operator*(const ComplexLaurentPoly& l, const ComplexLaurentPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Complex> v(l.coeffs_.size() + r.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) v[i + j] += l.coeffs_[i] * r.coeffs_[j];
    return ComplexLaurentPoly(l.min_exp_ + r.min_exp_, std::move(v));
}

ComplexLaurentPoly operator*(Complex c, const ComplexLaurentPoly& p) {
    std::vector<Complex> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return ComplexLaurentPoly(p.min_exp_, std::move(v));
}

double distance(const ComplexLaurentPoly& l, const ComplexLaurentPoly& r) { return (l - r).max_norm(); }

MatrixLaurentPoly::MatrixLaurentPoly(int min_exp, std::vector<Mat2> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    normalize();
}

MatrixLaurentPoly MatrixLaurentPoly::monomial(int exp, const Mat2& m) { return MatrixLaurentPoly(exp, {m}); }

void MatrixLaurentPoly::normalize() {
    auto nonzero = [](const Mat2& m) { return !m.isZero(0.0); };
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), nonzero);
    if (first == coeffs_.end()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    min_exp_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (!nonzero(coeffs_.back())) coeffs_.pop_back();
}

Mat2 MatrixLaurentPoly::coefficient(int exp) const {
    if (is_zero() || exp < min_exp_ || exp > max_exp()) return Mat2::Zero();
    return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

Mat2 MatrixLaurentPoly::operator()(Complex t) const {
    Mat2 acc = Mat2::Zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc * std::pow(t, min_exp_);
}

MatrixLaurentPoly& MatrixLaurentPoly::operator+=(const MatrixLaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(min_exp_, o.min_exp_);
    const int hi = std::max(max_exp(), o.max_exp());
    std::vector<Mat2> v(static_cast<std::size_t>(hi - lo) + 1, Mat2::Zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[static_cast<std::size_t>(min_exp_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        v[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.coeffs_[i];
    *this = MatrixLaurentPoly(lo, std::move(v));
    return *this;
}

MatrixLaurentPoly operator-(const MatrixLaurentPoly& l, const MatrixLaurentPoly& r) {
    return l + Complex(-1.0) * r;
}

MatrixLaurentPoly operator*(const MatrixLaurentPoly& l, const MatrixLaurentPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Mat2> v(l.coeffs_.size() + r.coeffs_.size() - 1, Mat2::Zero());
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) v[i + j] += l.coeffs_[i] * r.coeffs_[j];
    return MatrixLaurentPoly(l.min_exp_ + r.min_exp_, std::move(v));
}

MatrixLaurentPoly operator*(Complex c, const MatrixLaurentPoly& p) {
    std::vector<Mat2> v = p.coeffs_;
    for (auto& m : v) m *= c;
    return MatrixLaurentPoly(p.min_exp_, std::move(v));
}

Mat2 word_image(const FreeWord& w, const Mat2& ma, const Mat2& mb) {
    const Mat2 ia = adjugate(ma);
    const Mat2 ib = adjugate(mb);
    Mat2 acc = Mat2::Identity();
    for (const auto& l : w.letters()) {
        const Mat2& step = l.gen == Generator::A ? (l.exponent > 0 ? ma : ia) : (l.exponent > 0 ? mb : ib);
        for (int k = 0; k < std::abs(l.exponent); ++k) acc = acc * step;
    }
    return acc;
}

MatrixLaurentPoly phi(const GroupRingElement& elem, const SL2Matrix& a, const SL2Matrix& b) {
    std::map<int, Mat2> acc;
    for (const auto& [u, c] : elem.terms()) {
        auto [it, inserted] = acc.try_emplace(exponent_sum(u), Mat2::Zero());
        it->second += static_cast<double>(c) * word_image(u, a.matrix(), b.matrix());
    }
    if (acc.empty()) return {};
    const int lo = acc.begin()->first;
    std::vector<Mat2> v(static_cast<std::size_t>(acc.rbegin()->first - lo) + 1, Mat2::Zero());
    for (const auto& [e, m] : acc) v[static_cast<std::size_t>(e - lo)] = m;
    return MatrixLaurentPoly(lo, std::move(v));
}

ComplexLaurentPoly det_phi(const GroupRingElement& elem, const SL2Matrix& a, const SL2Matrix& b,
                           double zero_tolerance) {
    using WideComplex = std::complex<long double>;
    using WideMat = Eigen::Matrix<WideComplex, 2, 2>;
    const auto widen = [](const Mat2& m) {
        WideMat w;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) w(i, j) = WideComplex(m(i, j).real(), m(i, j).imag());
        return w;
    };
    const auto adj = [](const WideMat& m) {
        WideMat r;
        r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
        return r;
    };
    const WideMat ma = widen(a.matrix()), mb = widen(b.matrix());
    const WideMat ia = adj(ma), ib = adj(mb);

    std::map<int, WideMat> acc;
    for (const auto& [u, c] : elem.terms()) {
        WideMat img = WideMat::Identity();
        for (const auto& l : u.spelled())
            img = img * (l.gen == Generator::A ? (l.exponent > 0 ? ma : ia) : (l.exponent > 0 ? mb : ib));
        auto [it, inserted] = acc.try_emplace(exponent_sum(u), WideMat::Zero());
        it->second += static_cast<long double>(c) * img;
    }
    std::map<int, WideComplex> d;
    for (const auto& [i, p] : acc)
        for (const auto& [j, q] : acc) d[i + j] += p(0, 0) * q(1, 1) - p(0, 1) * q(1, 0);
    std::map<int, Complex> out;
    for (const auto& [e, v] : d) out[e] = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    return ComplexLaurentPoly(out, zero_tolerance);
}

ComplexLaurentPoly det(const MatrixLaurentPoly& m, double zero_tolerance) {
    if (m.is_zero()) return {};
    const auto& c = m.coeffs();
    std::vector<Complex> v(2 * c.size() - 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) v[i + j] += c[i](0, 0) * c[j](1, 1) - c[i](0, 1) * c[j](1, 0);
    return ComplexLaurentPoly(2 * m.min_exp(), std::move(v), zero_tolerance);
}

Division divide_exact(const ComplexLaurentPoly& num, const ComplexLaurentPoly& den, double division_tolerance,
                      double zero_tolerance) {
    if (den.is_zero()) throw ZeroPolynomial("division by the zero Laurent polynomial");
    if (num.is_zero()) return {ComplexLaurentPoly{}, 0.0};
    const auto& n = num.coeffs();
    const auto& d = den.coeffs();
    if (n.size() < d.size()) throw NotDivisible("dividend span is smaller than divisor span");

    std::vector<Complex> rem = n;
    std::vector<Complex> q(n.size() - d.size() + 1, 0.0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Complex c = rem[k + d.size() - 1] / d.back();
        q[k] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
    }
    double rnorm = 0.0;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) rnorm = std::max(rnorm, std::abs(rem[k]));
    const double rel = rnorm / num.max_norm();
    if (rel > division_tolerance)
        throw NotDivisible("relative division remainder " + std::to_string(rel) + " exceeds tolerance");
    return {ComplexLaurentPoly(num.min_exp() - den.min_exp(), std::move(q), zero_tolerance), rel};
}

}  // namespace tak
