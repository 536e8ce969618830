#pragma once

// Exact scalars. Rational is GMP's mpq_t behind Boost.Multiprecision; it is
// always canonical (lowest terms, positive denominator).

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace epc {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

/// Integer power of a rational, exponent may be negative (q must then be nonzero).
Rational pow(const Rational& base, long exponent);

/// Parses "12", "-3/7", "1.8", "1e-4", "-2.5E+3" exactly.
/// Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

/// Exact m-th root of a nonnegative rational when it exists.
std::optional<Rational> exact_root(const Rational& x, unsigned m);

/// Rounds x to `digits` significant decimal digits (round half to even) and
/// renders it as d.ddd...e+XX. Zero renders as "0".
std::string to_scientific(const Rational& x, int digits);

/// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const Rational& x);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// floor(log10(|x|)) for nonzero x.
long decimal_exponent(const Rational& x);

double to_double(const Rational& x);
long double to_long_double(const Rational& x);

}  // namespace epc
