#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace kpq {

// Exact rational scalars. cpp_rational keeps values reduced with a positive
// denominator, which is exactly the canonical form the serializers rely on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" (decimal, optional leading '-').
Rational rational_from_string(const std::string& s);

// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

// Generalized binomial coefficient: n may be negative, k >= 0.
Rational binomial(long n, long k);

// base^e for integer e (negative e inverts; base must be nonzero then).
Rational rational_pow(const Rational& base, long e);

}  // namespace kpq
