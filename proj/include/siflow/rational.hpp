#pragma once

// Exact scalar types and small number-theory helpers shared by the whole
// library.  Rational arithmetic is GMP-backed, the numeric layer is MPFR
// with runtime-selectable precision (SIFLOW_PRECISION decimal digits).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace siflow {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline int default_digits() {
  if (const char* env = std::getenv("SIFLOW_PRECISION")) {
    const int d = std::atoi(env);
    if (d >= 10 && d <= 10000) return d;
  }
  return 40;
}

// Sets the working precision of the numeric layer.  Call once at startup;
// BigFloat values constructed afterwards carry this precision.
inline void init_precision() { BigFloat::default_precision(default_digits()); }

inline BigFloat to_bigfloat(const Rational& q) {
  return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

// num/den with the sign moved to the numerator.  The two-argument Rational
// constructor must never see a negative denominator (it reads it as
// unsigned), so quotients built from computed integers go through here.
inline Rational ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Accepts "p", "p/q" and plain decimals like "-0.125".
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw SpecError("empty rational literal");
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const Integer num(s.substr(0, slash));
      const Integer den(s.substr(slash + 1));
      if (den == 0) throw SpecError("rational literal with zero denominator: " + text);
      return Rational(num, den);
    }
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const size_t frac_len = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+")
        throw SpecError("malformed decimal literal: " + text);
      Integer den = 1;
      for (size_t i = 0; i < frac_len; ++i) den *= 10;
      return Rational(Integer(digits), den);
    }
    return Rational(Integer(s), Integer(1));
  } catch (const std::runtime_error&) {
    throw SpecError("malformed rational literal: " + text);
  }
}

// (a)_m = a (a+1) ... (a+m-1); empty product for m = 0.
inline Rational pochhammer(const Rational& a, unsigned m) {
  Rational r = 1;
  Rational f = a;
  for (unsigned i = 0; i < m; ++i, f += 1) r *= f;
  return r;
}

inline Rational factorial(unsigned n) {
  Rational r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace siflow
