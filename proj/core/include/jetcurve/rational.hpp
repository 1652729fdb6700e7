// Arbitrary-precision integers and rationals, plus the small numeric helpers
// used across the library. Backed by boost::multiprecision (header-only).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jetcurve {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den reduced to lowest terms with positive denominator.
/// Routed through division because the two-argument cpp_rational constructor
/// rejects input that is not already normalized.
inline Rational make_rational(const Int& num, const Int& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline Int factorial(int n)
{
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Int binomial(const Int& n, int k)
{
    if (k < 0 || n < k) return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1; // exact: product of i+1 consecutive integers is divisible by (i+1)!
    }
    return b;
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Parses "p" or "p/q" with optional sign on p. Throws std::invalid_argument.
Rational rational_from_string(std::string_view text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::complex<double> to_complex(const Rational& r)
{
    return {to_double(r), 0.0};
}

/// Conversion hook used by the templated evaluators: exact values pass
/// through, complex evaluation converts once at the leaves.
template <typename K>
K scalar_cast(const Rational& r);

template <>
inline Rational scalar_cast<Rational>(const Rational& r) { return r; }

template <>
inline std::complex<double> scalar_cast<std::complex<double>>(const Rational& r)
{
    return to_complex(r);
}

template <>
inline double scalar_cast<double>(const Rational& r) { return to_double(r); }

} // namespace jetcurve
