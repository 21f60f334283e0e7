#include "tak/format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "tak/error.hpp"

namespace tak {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drops the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

double round12(double v) {
    if (!std::isfinite(v)) return v;
    const double r = std::strtod(format_double(v).c_str(), nullptr);
    return r == 0.0 ? 0.0 : r;
}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParameterError("malformed complex literal '" + std::string(whole) + "'");
    return v;
}

double parse_imag_coeff(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, whole);
}

}  // namespace

Complex parse_complex(std::string_view s) {
    const std::string_view whole = s;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParameterError("empty complex literal");
    if (s.back() != 'i') return {parse_real(s, whole), 0.0};
    s.remove_suffix(1);
    // split at the last sign that is not a leading sign or part of an exponent
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_imag_coeff(s, whole)};
    return {parse_real(s.substr(0, split), whole), parse_imag_coeff(s.substr(split), whole)};
}

std::string format_complex(Complex c) {
    const std::string re = format_double(c.real());
    const double im = round12(c.imag());
    if (im == 0.0) return re;
    const std::string ims = format_double(im);
    return re + (ims.front() == '-' ? "" : "+") + ims + "i";
}

}  // namespace tak
