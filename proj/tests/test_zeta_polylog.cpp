#include <doctest.h>

#include <mpfr.h>

#include "dualref/errors.hpp"
#include "dualref/polylog.hpp"
#include "dualref/rational.hpp"
#include "dualref/real.hpp"
#include "dualref/zeta.hpp"

namespace {

using namespace dualref;

// Reference constants, independent of everything under test.
const char* kLn2 =
    "0.69314718055994530941723212145817656807550013436025525412068000949339362196969471560586332699641869";
const char* kZeta3 =
    "1.2020569031595942853997381615114499907649862923404988817922715553418382057863130901864558736093353";

Real mpfr_log_ref(const Real& z) {
  Real out = z;
  mpfr_log(out.backend().data(), z.backend().data(), MPFR_RNDN);
  return out;
}

Real mpfr_exp_ref(const Real& z) {
  Real out = z;
  mpfr_exp(out.backend().data(), z.backend().data(), MPFR_RNDN);
  return out;
}

TEST_CASE("exact Bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("riemann_zeta against closed forms and frozen digits") {
  PrecisionGuard guard(320);
  SUBCASE("zeta(2) = pi^2/6") {
    BoundedReal z2 = riemann_zeta(2, 256);
    Real ref = real_pi();
    ref = ref * ref / 6;
    CHECK(abs(z2.value - ref) <= z2.bound + real_pow2(-300));
    CHECK(z2.bound <= real_pow2(-256));
  }
  SUBCASE("zeta(3) frozen digits") {
    // The dual-route cross-check against the nested-sum oracle lives in the
    // mzv suite; here the reference digits pin the Euler-Maclaurin route.
    BoundedReal z3 = riemann_zeta(3, 256);
    Real ref(kZeta3);
    CHECK(abs(z3.value - ref) <= z3.bound + real_pow2(-140));
  }
  SUBCASE("zeta(4) = pi^4/90") {
    BoundedReal z4 = riemann_zeta(4, 256);
    Real p = real_pi();
    Real ref = p * p * p * p / 90;
    CHECK(abs(z4.value - ref) <= z4.bound + real_pow2(-300));
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(riemann_zeta(1, 64), domain_error);
    CHECK_THROWS_AS(riemann_zeta(0, 64), domain_error);
  }
}

TEST_CASE("principal_log") {
  PrecisionGuard guard(256);
  SUBCASE("ln(0.5) is negative and matches the frozen digits of -ln 2") {
    BoundedReal l = principal_log(Real("0.5"), 256);
    CHECK(l.value < 0);
    CHECK(abs(l.value + Real(kLn2)) <= l.bound + real_pow2(-250));
  }
  SUBCASE("functional identity ln(0.25) = 2 ln(0.5)") {
    BoundedReal a = principal_log(Real("0.25"), 256);
    BoundedReal b = principal_log(Real("0.5"), 256);
    CHECK(abs(a.value - 2 * b.value) <= a.bound + 2 * b.bound + real_pow2(-250));
  }
  SUBCASE("exp is the inverse within 2^{-B+4}") {
    for (const char* zs : {"0.3", "0.5", "0.9"}) {
      Real z(zs);
      BoundedReal l = principal_log(z, 256);
      CHECK(abs(mpfr_exp_ref(l.value) - z) <= real_pow2(-252));
    }
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(principal_log(Real(0), 128), domain_error);
    CHECK_THROWS_AS(principal_log(Real(-1), 128), domain_error);
  }
}

TEST_CASE("mpl_series closed forms at depth 1 and 2") {
  PrecisionGuard guard(256);
  SUBCASE("Li_1(z) = -ln(1-z)") {
    for (const char* zs : {"0.2", "0.5", "0.9"}) {
      Real z(zs);
      BoundedReal li = mpl_series(MultiIndex{1}, z, 256);
      Real ref = -mpfr_log_ref(Real(1) - z);
      CHECK(abs(li.value - ref) <= li.bound + real_pow2(-250));
    }
  }
  SUBCASE("Li_2(1/2) frozen and classical closed form pi^2/12 - ln^2(2)/2") {
    BoundedReal li = mpl_series(MultiIndex{2}, Real("0.5"), 256);
    Real p = real_pi();
    Real l2(kLn2);
    Real ref = p * p / 12 - l2 * l2 / 2;
    CHECK(abs(li.value - ref) <= li.bound + real_pow2(-250));
    // leading decimal digits, frozen
    CHECK(real_to_string(li.value, 15).substr(0, 17) == "5.822405264650125");
  }
  SUBCASE("Li_{1,1}(z) = ln^2(1-z)/2") {
    BoundedReal li = mpl_series(MultiIndex{1, 1}, Real("0.5"), 256);
    Real l2(kLn2);
    CHECK(abs(li.value - l2 * l2 / 2) <= li.bound + real_pow2(-250));
  }
  SUBCASE("Li_{1^d}(z) = (-ln(1-z))^d / d! for d <= 6") {
    for (const char* zs : {"0.2", "0.5", "0.8"}) {
      Real z(zs);
      Real ml = -mpfr_log_ref(Real(1) - z);
      Real pw(1);
      Real fact(1);
      for (int d = 1; d <= 6; ++d) {
        pw *= ml;
        fact *= d;
        BoundedReal li = mpl_series(MultiIndex(std::vector<int>(d, 1)), z, 256);
        CHECK(abs(li.value - pw / fact) <= li.bound + real_pow2(-248));
      }
    }
  }
}

TEST_CASE("mpl_series monotonicity and positivity on a sampled grid") {
  PrecisionGuard guard(128);
  for (const MultiIndex& k : {MultiIndex{2}, MultiIndex{1, 2}, MultiIndex{2, 1}, MultiIndex{1, 1, 3}}) {
    Real prev(0);
    for (const char* zs : {"0.1", "0.3", "0.5", "0.7", "0.9"}) {
      BoundedReal v = mpl_series(k, Real(zs), 128);
      CHECK(v.value > 0);
      CHECK(v.value > prev);
      prev = v.value;
    }
  }
}

TEST_CASE("mpl_series certified bounds are honest against recomputation") {
  PrecisionGuard guard(192);
  for (const char* zs : {"0.37", "0.61", "0.88"}) {
    for (const MultiIndex& k : {MultiIndex{3}, MultiIndex{1, 2}, MultiIndex{2, 2, 1}}) {
      BoundedReal lo = mpl_series(k, Real(zs), 160);
      BoundedReal hi = mpl_series(k, Real(zs), 240);  // much tighter reference
      CHECK(abs(lo.value - hi.value) <= lo.bound + hi.bound);
      CHECK(hi.bound < lo.bound);
    }
  }
}

TEST_CASE("mpl_series domain handling") {
  PrecisionGuard guard(64);
  CHECK_THROWS_AS(mpl_series(MultiIndex{2}, Real(0), 64), domain_error);
  CHECK_THROWS_AS(mpl_series(MultiIndex{2}, Real("0.995"), 64), domain_error);
  CHECK_THROWS_AS(mpl_series(MultiIndex{2}, Real(-1), 64), domain_error);
  CHECK_THROWS_AS(mpl_series(MultiIndex{}, Real("0.5"), 64), index_error);
  // non-admissible indices are fine away from z = 1
  CHECK(mpl_series(MultiIndex{2, 1}, Real("0.5"), 64).value > 0);
}

TEST_CASE("precision scaling: higher target, smaller certified bound") {
  PrecisionGuard guard(600);
  BoundedReal a = mpl_series(MultiIndex{2}, Real("0.5"), 128);
  BoundedReal b = mpl_series(MultiIndex{2}, Real("0.5"), 512);
  CHECK(a.bound <= real_pow2(-128));
  CHECK(b.bound <= real_pow2(-512));
  CHECK(abs(a.value - b.value) <= a.bound + b.bound);
}

}  // namespace
