#include "kpq/rational.hpp"

#include <stdexcept>

namespace kpq {

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(Int(s));
  }
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational binomial(long n, long k) {
  if (k < 0) throw std::invalid_argument("binomial: negative k");
  Rational acc = 1;
  for (long i = 0; i < k; ++i) {
    acc *= Rational(n - i, i + 1);
  }
  return acc;
}

Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return 1 / rational_pow(base, -e);
  }
  Rational acc = 1;
  Rational b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

}  // namespace kpq
