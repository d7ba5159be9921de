#include "dualref/real.hpp"

#include <cmath>
#include <sstream>

namespace dualref {

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 4;
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(Real::default_precision()) {
  if (bits < 24) bits = 24;
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionGuard::~PrecisionGuard() {
  Real::default_precision(saved_digits10_);
}

Real real_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real real_pow2(long e) {
  Real r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

Real real_from_rational(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real at_working_precision(const Real& x) {
  Real r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real rounding_eps(const Real& x) {
  if (x == 0) return Real(0);
  long prec = mpfr_get_prec(x.backend().data());
  return abs(x) * real_pow2(1 - prec);
}

std::string real_to_string(const Real& x, unsigned digits) {
  std::ostringstream os;
  os.setf(std::ios_base::scientific);
  os.precision(static_cast<int>(digits));
  os << x;
  return os.str();
}

Real BoundedReal::abs_upper() const {
  return abs(value) + bound;
}

namespace {

// Inflates an error bound to absorb the rounding of the handful of mpfr
// operations used to compute it, plus the rounding of the value itself.
Real settle(const Real& raw_bound, const Real& value) {
  return raw_bound + raw_bound * real_pow2(-24) + rounding_eps(value);
}

}  // namespace

BoundedReal& BoundedReal::operator+=(const BoundedReal& o) {
  value += o.value;
  bound = settle(bound + o.bound, value);
  return *this;
}

BoundedReal& BoundedReal::operator-=(const BoundedReal& o) {
  value -= o.value;
  bound = settle(bound + o.bound, value);
  return *this;
}

BoundedReal& BoundedReal::operator*=(const BoundedReal& o) {
  Real raw = abs(value) * o.bound + abs(o.value) * bound + bound * o.bound;
  value *= o.value;
  bound = settle(raw, value);
  return *this;
}

BoundedReal& BoundedReal::operator*=(const Real& c) {
  value *= c;
  bound = settle(bound * abs(c), value);
  return *this;
}

BoundedReal& BoundedReal::operator/=(long n) {
  if (n == 0) throw domain_error("BoundedReal division by zero");
  value /= n;
  bound = settle(bound / std::abs(n), value);
  return *this;
}

BoundedReal& BoundedReal::operator/=(const Real& c) {
  if (c == 0) throw domain_error("BoundedReal division by zero");
  value /= c;
  bound = settle(bound / abs(c), value);
  return *this;
}

BoundedReal operator+(BoundedReal a, const BoundedReal& b) { return a += b; }
BoundedReal operator-(BoundedReal a, const BoundedReal& b) { return a -= b; }
BoundedReal operator*(BoundedReal a, const BoundedReal& b) { return a *= b; }
BoundedReal operator*(BoundedReal a, const Real& c) { return a *= c; }

bool operator==(const BoundedReal& a, const BoundedReal& b) {
  return a.value == b.value && a.bound == b.bound;
}

BoundedReal bounded_inverse(const BoundedReal& v) {
  Real av = abs(v.value);
  if (!(av > v.bound)) {
    throw precision_error("bounded_inverse: interval contains zero");
  }
  Real value = Real(1) / v.value;
  // |1/(v+d) - 1/v| <= b / (|v| (|v|-b)) for |d| <= b < |v|.
  Real raw = v.bound / (av * (av - v.bound));
  return BoundedReal(value, settle(raw, value));
}

}  // namespace dualref
