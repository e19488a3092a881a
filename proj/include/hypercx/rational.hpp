#ifndef HYPERCX_RATIONAL_HPP
#define HYPERCX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hypercx {

/// Exact scalar for the algebraic mode. All structure constants, operator
/// coefficients and CR-system entries are kept in this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// Formats as "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

/// Accepts "p", "p/q", decimals like "-1.25" and leading/trailing spaces.
Rational parse_rational(const std::string& text);

} // namespace hypercx

#endif
