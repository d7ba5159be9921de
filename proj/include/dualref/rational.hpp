#pragma once

#include <gmpxx.h>

#include <string>

#include "dualref/errors.hpp"
#include "dualref/scalar_traits.hpp"

namespace dualref {

// Exact rational scalar. GMP's mpq_class already provides canonical form and
// exact arithmetic; this header only adds the few helpers the rest of the
// code needs (parsing in "p/q" form, factorials, falling products).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
Rational rational_from_string(const std::string& text);

// Canonical "p/q" form; integers render without the "/1".
std::string rational_to_string(const Rational& q);

// n! as an exact integer.
Integer factorial(unsigned n);

// Exact n^e for integer n, e >= 0.
Integer integer_pow(const Integer& base, unsigned e);

template <>
struct scalar_ops<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_long(long n) { return Rational(n); }
  static bool is_zero(const Rational& v) { return v == 0; }
  static Rational abs_val(const Rational& v) { return abs(v); }
  static bool abs_greater(const Rational& a, const Rational& b) { return abs(a) > abs(b); }
  // |v| <= tol, the equality test for an exact field when tol = 0.
  static bool within(const Rational& v, const Rational& tol) { return abs(v) <= tol; }
  static void div_by_long(Rational& v, long n) { v /= Rational(n); }
  static Rational inv(const Rational& v) {
    if (v == 0) throw domain_error("inverse of zero rational");
    return Rational(1) / v;
  }
};

}  // namespace dualref
