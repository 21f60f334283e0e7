#pragma once

#include <string>
#include <string_view>

#include "tak/matrix.hpp"

namespace tak {

/// 12 significant digits, lowercase exponent ("%.12g"); negative zero prints as 0.
std::string format_double(double v);

/// v rounded to 12 significant digits, so that JSON output is byte-stable.
double round12(double v);

/// "a+bi", "a-bi", "a", "bi", "i", "-i". Exponents allowed in either part ("1e-3-2.5e2i").
/// Throws ParameterError.
Complex parse_complex(std::string_view s);

/// Inverse of parse_complex at 12 significant digits.
std::string format_complex(Complex c);

}  // namespace tak
