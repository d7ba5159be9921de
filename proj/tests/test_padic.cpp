#include <doctest.h>

#include <array>
#include <cstdint>

#include "dualref/errors.hpp"
#include "dualref/padic.hpp"

namespace {

using namespace dualref;

TEST_CASE("context construction validates the prime and sizes the budget") {
  PadicContext ctx = PadicContext::make(3, 30, 8);
  CHECK(ctx.prime == 3);
  CHECK(ctx.precision == 30);
  CHECK(ctx.modulus == integer_pow(Integer(3), 30));
  CHECK(ctx.denom_budget == 4);  // ceil(8/2) covers v_3(8!) = 2

  CHECK(PadicContext::make(2, 30, 8).denom_budget == 8);  // >= v_2(8!) = 7
  CHECK_THROWS_AS(PadicContext::make(4, 30, 8), padic_error);
  CHECK_THROWS_AS(PadicContext::make(1, 30, 8), padic_error);
  CHECK_THROWS_AS(PadicContext::make(9, 30, 8), padic_error);
  CHECK_THROWS_AS(PadicContext::make(5, 0, 8), padic_error);
}

TEST_CASE("valuation examples and algebra") {
  CHECK(valuation(Rational(12), 2) == 2);
  CHECK(valuation(Rational(1, 6), 3) == -1);
  CHECK(valuation(Rational(5, 7), 5) == 1);
  CHECK(valuation(Rational(-18), 3) == 2);
  CHECK(valuation(Rational(0), 7) == kValuationInfinity);

  SUBCASE("v(ab) = v(a) + v(b); ultrametric inequality") {
    std::array<Rational, 6> samples = {Rational(12),    Rational(1, 6), Rational(-9, 4),
                                       Rational(5, 27), Rational(7),    Rational(-2, 3)};
    for (const Rational& a : samples) {
      for (const Rational& b : samples) {
        CHECK(valuation(a * b, 3) == valuation(a, 3) + valuation(b, 3));
        if (a + b != 0) {
          long va = valuation(a, 3), vb = valuation(b, 3);
          long vsum = valuation(a + b, 3);
          CHECK(vsum >= std::min(va, vb));
          if (va != vb) CHECK(vsum == std::min(va, vb));
        }
      }
    }
  }
}

TEST_CASE("canonical reduction modulo l^N") {
  CHECK(reduce_mod(Rational(7), PadicContext::make(5, 2, 0)) == 7);
  CHECK(reduce_mod(Rational(1, 2), PadicContext::make(5, 1, 0)) == 3);  // 2*3 = 1 mod 5
  CHECK(reduce_mod(Rational(-1), PadicContext::make(3, 2, 0)) == 8);
  CHECK_THROWS_AS(reduce_mod(Rational(1, 3), PadicContext::make(3, 2, 0)), padic_error);
  CHECK_THROWS_AS(reduce_mod(Rational(5, 12), PadicContext::make(2, 4, 0)), padic_error);

  SUBCASE("ring homomorphism on valid inputs") {
    PadicContext ctx = PadicContext::make(7, 6, 0);
    std::array<Rational, 5> samples = {Rational(3, 5), Rational(-11, 4), Rational(9),
                                       Rational(1, 48), Rational(-2, 3)};
    for (const Rational& a : samples) {
      for (const Rational& b : samples) {
        Integer lhs = reduce_mod(a + b, ctx);
        Integer rhs = (reduce_mod(a, ctx) + reduce_mod(b, ctx)) % ctx.modulus;
        CHECK(lhs == rhs);
        Integer lhm = reduce_mod(a * b, ctx);
        Integer rhm = (reduce_mod(a, ctx) * reduce_mod(b, ctx)) % ctx.modulus;
        CHECK(lhm == rhm);
      }
    }
  }
}

TEST_CASE("l-adic sampler: determinism, range, and nonzero draws") {
  PadicContext ctx = PadicContext::make(3, 30, 8);
  LadicSampler s1(99, ctx);
  LadicSampler s2(99, ctx);
  LadicSampler s3(100, ctx);
  bool all_equal = true, any_differs = false;
  for (int i = 0; i < 200; ++i) {
    Integer a = s1.next();
    Integer b = s2.next();
    Integer c = s3.next();
    CHECK(a >= 0);
    CHECK(a < ctx.modulus);
    all_equal = all_equal && (a == b);
    any_differs = any_differs || (a != c);
  }
  CHECK(all_equal);
  CHECK(any_differs);

  CHECK(random_l_integer(5, ctx) == LadicSampler(5, ctx).next());

  SUBCASE("next_nonzero never returns zero even when zero is likely") {
    PadicContext tiny = PadicContext::make(2, 1, 0);  // draws from {0, 1}
    LadicSampler s(1, tiny);
    for (int i = 0; i < 64; ++i) CHECK(s.next_nonzero() == 1);
  }
}

TEST_CASE("sampler uniformity: chi-square smoke test over 10^4 draws") {
  // l = 5, N = 1: five cells,derived expectation 2000 per cell.
  PadicContext ctx = PadicContext::make(5, 1, 0);
  LadicSampler s(2024, ctx);
  std::array<long, 5> counts{};
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) counts[s.next().get_ui()] += 1;
  double chi2 = 0;
  for (long c : counts) {
    double dev = static_cast<double>(c) - 2000.0;
    chi2 += dev * dev / 2000.0;
  }
  // 4 degrees of freedom; 23.5 is the 1e-4 tail, generous for a fixed seed.
  CHECK(chi2 < 23.5);

  SUBCASE("wide modulus: residues mod 8 stay balanced") {
    PadicContext wide = PadicContext::make(2, 20, 0);
    LadicSampler w(77, wide);
    std::array<long, 8> buckets{};
    for (int i = 0; i < draws; ++i) {
      buckets[mpz_fdiv_ui(w.next().get_mpz_t(), 8)] += 1;
    }
    double chi2w = 0;
    for (long c : buckets) {
      double dev = static_cast<double>(c) - 1250.0;
      chi2w += dev * dev / 1250.0;
    }
    CHECK(chi2w < 29.9);  // 7 dof, 1e-4 tail
  }
}

}  // namespace
