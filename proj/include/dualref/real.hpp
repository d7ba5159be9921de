#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "dualref/errors.hpp"
#include "dualref/scalar_traits.hpp"

namespace dualref {

// Arbitrary-precision real scalar.  Expression templates are switched off so
// Real behaves like a plain value type; precision is variable per object and
// new objects pick up the thread default, managed with PrecisionGuard below.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Decimal digits needed to faithfully carry `bits` of binary precision,
// with a few guard digits.
unsigned digits10_for_bits(unsigned bits);

// Scoped override of the default precision (in bits) for newly created Real
// values.  Restores the previous default on destruction.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits10_;
};

// pi at the current default precision.
Real real_pi();

// Correctly rounded conversion of an exact rational at the current default
// precision.
Real real_from_rational(const mpq_class& q);

// x re-rounded at the current default precision.  Copying a Real preserves
// the source's precision, so routines re-round their inputs on entry to keep
// every intermediate at the guarded working precision.
Real at_working_precision(const Real& x);

// 2^e as a Real (exact).
Real real_pow2(long e);

// One rounding ulp of x at x's own precision; used to account for the
// rounding of a single arithmetic result.
Real rounding_eps(const Real& x);

// Fixed-width scientific decimal rendering (deterministic for a given value).
std::string real_to_string(const Real& x, unsigned digits);

// A real value together with a certified absolute error bound:
// the represented quantity lies in [value - bound, value + bound].
// Arithmetic propagates bounds conservatively, including the rounding of
// each operation.
struct BoundedReal {
  Real value;
  Real bound;

  BoundedReal() : value(0), bound(0) {}
  explicit BoundedReal(long v) : value(v), bound(0) {}
  explicit BoundedReal(const Real& v) : value(v), bound(0) {}
  BoundedReal(Real v, Real b) : value(std::move(v)), bound(std::move(b)) {}

  // |represented quantity| is at most this.
  Real abs_upper() const;

  bool is_exact_zero() const { return value == 0 && bound == 0; }

  BoundedReal operator-() const { return BoundedReal(-value, bound); }
  BoundedReal& operator+=(const BoundedReal& o);
  BoundedReal& operator-=(const BoundedReal& o);
  BoundedReal& operator*=(const BoundedReal& o);
  BoundedReal& operator*=(const Real& c);
  BoundedReal& operator/=(long n);
  BoundedReal& operator/=(const Real& c);  // c must be nonzero and exact
};

BoundedReal operator+(BoundedReal a, const BoundedReal& b);
BoundedReal operator-(BoundedReal a, const BoundedReal& b);
BoundedReal operator*(BoundedReal a, const BoundedReal& b);
BoundedReal operator*(BoundedReal a, const Real& c);
bool operator==(const BoundedReal& a, const BoundedReal& b);

// 1/v with a propagated bound; requires the interval to stay away from zero.
BoundedReal bounded_inverse(const BoundedReal& v);

template <>
struct scalar_ops<BoundedReal> {
  static constexpr bool exact = false;
  static BoundedReal zero() { return BoundedReal(); }
  static BoundedReal one() { return BoundedReal(1); }
  static BoundedReal from_long(long n) { return BoundedReal(n); }
  static bool is_zero(const BoundedReal& v) { return v.is_exact_zero(); }
  static BoundedReal abs_val(const BoundedReal& v) { return BoundedReal(abs(v.value), v.bound); }
  static bool abs_greater(const BoundedReal& a, const BoundedReal& b) {
    return abs(a.value) > abs(b.value);
  }
  // The comparison is on central values; certified bounds ride along in
  // the report so callers can judge how much slack the tolerance had.
  static bool within(const BoundedReal& v, const BoundedReal& tol) {
    return abs(v.value) <= tol.value;
  }
  static void div_by_long(BoundedReal& v, long n) { v /= n; }
  static BoundedReal inv(const BoundedReal& v) { return bounded_inverse(v); }
};

}  // namespace dualref
