#include <doctest.h>

#include <mpfr.h>

#include <vector>

#include "dualref/errors.hpp"
#include "dualref/kz.hpp"
#include "dualref/mzv.hpp"
#include "dualref/polylog.hpp"
#include "dualref/real.hpp"
#include "dualref/series.hpp"

namespace {

using namespace dualref;

Real mpfr_log_ref(const Real& z) {
  Real out = z;
  mpfr_log(out.backend().data(), z.backend().data(), MPFR_RNDN);
  return out;
}

TEST_CASE("path convention validates its domain") {
  PrecisionGuard guard(128);
  CHECK_NOTHROW(PathConvention(Real("0.5")));
  CHECK_THROWS_AS(PathConvention(Real(0)), domain_error);
  CHECK_THROWS_AS(PathConvention(Real(1)), domain_error);
  CHECK_THROWS_AS(PathConvention(Real("1.25")), domain_error);
  CHECK_THROWS_AS(PathConvention(Real("-0.5")), domain_error);
}

TEST_CASE("Euler witness: (2,2,1/2) reproduces zeta(2) = pi^2/6") {
  PrecisionGuard guard(320);
  Real oracle_target = real_pow2(-40);
  Main1Record rec = verify_main1_numeric(2, 2, Real("0.5"), 256, oracle_target);

  // 2 Li_2(1/2) + ln^2 2 = pi^2/6, checked against mpfr's pi
  Real ref = real_pi();
  ref = ref * ref / 6;
  CHECK(abs(rec.lhs_total.value - ref) < real_pow2(-100));
  CHECK(abs(rec.lhs_total.value - ref) <= rec.lhs_total.bound + real_pow2(-310));
  CHECK(rec.residual < Real("1e-10"));

  // the record is internally consistent
  Real recon = rec.lhs_first_sum.value + rec.lhs_second_sum.value;
  CHECK(abs(rec.lhs_total.value - recon) <= real_pow2(-240));
  CHECK(rec.residual == abs(rec.lhs_total.value - rec.rhs.value));
}

TEST_CASE("oracle-mode residuals across sample points") {
  PrecisionGuard guard(320);
  Real target = real_pow2(-40);
  SUBCASE("(2,3) at z = 0.3") {
    Main1Record rec = verify_main1_numeric(2, 3, Real("0.3"), 256, target);
    CHECK(rec.residual < Real("1e-10"));
  }
  SUBCASE("(3,3) at z = 0.7") {
    Main1Record rec = verify_main1_numeric(3, 3, Real("0.7"), 256, target);
    CHECK(rec.residual < Real("1e-10"));
  }
  SUBCASE("weight cap enforced for oracle mode") {
    CHECK_THROWS_AS(verify_main1_numeric(5, 6, Real("0.5"), 128, target), domain_error);
  }
}

TEST_CASE("z = 1/2 ties the (n,m) and (m,n) left sides together") {
  // At the fixed point of z <-> 1-z the two sums of (n,m) become the two
  // sums of (m,n) in the other order, so the totals must agree.
  PrecisionGuard guard(320);
  BoundedReal a23 = main1_first_sum(2, 3, Real("0.5"), 256) +
                    main1_second_sum(2, 3, Real("0.5"), 256);
  BoundedReal a32 = main1_first_sum(3, 2, Real("0.5"), 256) +
                    main1_second_sum(3, 2, Real("0.5"), 256);
  CHECK(abs(a23.value - a32.value) <= real_pow2(-248));
}

TEST_CASE("constancy mode") {
  PrecisionGuard guard(320);
  std::vector<Real> grid5 = {Real("0.2"), Real("0.35"), Real("0.5"), Real("0.65"), Real("0.8")};
  SUBCASE("(2,2) over the default grid, tighter than 1e-30") {
    ConstancyRecord rec = verify_main1_constancy(2, 2, grid5, 256);
    CHECK(rec.max_variation < Real("1e-30"));
    REQUIRE(rec.totals.size() == 5);
  }
  SUBCASE("(4,3) over a 3-point grid") {
    std::vector<Real> grid3 = {Real("0.3"), Real("0.5"), Real("0.7")};
    ConstancyRecord rec = verify_main1_constancy(4, 3, grid3, 256);
    CHECK(rec.max_variation < Real("1e-25"));
  }
  SUBCASE("single-element grid has zero variation") {
    std::vector<Real> one = {Real("0.4")};
    ConstancyRecord rec = verify_main1_constancy(3, 2, one, 128);
    CHECK(rec.max_variation == 0);
  }
}

TEST_CASE("endpoint limits of the two sums") {
  PrecisionGuard guard(256);
  Real z("0.001");
  Real lnz = mpfr_log_ref(z);
  SUBCASE("first sum vanishes like z |ln z|^{m-1} as z -> 0+") {
    for (int n = 2; n <= 5; ++n) {
      for (int m = 2; m <= 5 && n + m - 2 <= 8; ++m) {
        BoundedReal s = main1_first_sum(n, m, z, 192);
        Real cap = 4 * z * pow(abs(lnz), static_cast<unsigned>(m - 1));
        CHECK(abs(s.value) < cap);
      }
    }
  }
  SUBCASE("second sum vanishes symmetrically as z -> 1-") {
    Real znear1("0.999");
    for (int n = 2; n <= 5; ++n) {
      for (int m = 2; m <= 5 && n + m - 2 <= 8; ++m) {
        BoundedReal s = main1_second_sum(n, m, znear1, 192);
        Real cap = 4 * z * pow(abs(lnz), static_cast<unsigned>(n - 1));
        CHECK(abs(s.value) < cap);
      }
    }
  }
}

TEST_CASE("chain rule numerics") {
  PrecisionGuard guard(320);
  Real phi_target = real_pow2(-100);
  SUBCASE("degree 1 has no oracle content and collapses to the log identity") {
    ChainRuleRecord rec = verify_chain_rule_numeric(Real("0.5"), 1, 256, phi_target);
    CHECK(rec.max_residual < real_pow2(-230));
  }
  SUBCASE("degree 3 at z = 0.5") {
    ChainRuleRecord rec = verify_chain_rule_numeric(Real("0.5"), 3, 256, phi_target);
    CHECK(rec.max_residual < Real("1e-8"));
    CHECK(rec.degree == 3);
  }
}

TEST_CASE("duality via independent oracle evaluations") {
  PrecisionGuard guard(256);
  Real target = real_pow2(-40);
  SUBCASE("(2,2) compares an index with itself") {
    DualityRecord rec = verify_duality_numeric(2, 2, target);
    CHECK(rec.lhs_index == rec.rhs_index);
    CHECK(rec.residual == 0);
  }
  SUBCASE("(2,3): zeta(1,2) vs zeta(3)") {
    DualityRecord rec = verify_duality_numeric(2, 3, target);
    CHECK(rec.lhs_index == MultiIndex{1, 2});
    CHECK(rec.rhs_index == MultiIndex{3});
    CHECK(rec.residual < Real("1e-10"));
  }
}

TEST_CASE("numeric series builders: coefficients and group-likeness") {
  PrecisionGuard guard(320);
  SUBCASE("fundamental solution at z = 0.3") {
    Real z("0.3");
    NCSeries<BoundedReal> g0 = build_G0(z, 5, 256);
    Real lnz = mpfr_log_ref(z);
    // Coeff_X = ln z, Coeff_XY = -Li_2(z), Coeff_XX = ln^2 z / 2
    CHECK(abs(g0.coeff(Word::from_string("x")).value - lnz) <= real_pow2(-250));
    BoundedReal li2 = mpl_series(MultiIndex{2}, z, 256);
    CHECK(abs(g0.coeff(Word::from_string("xy")).value + li2.value) <=
          g0.coeff(Word::from_string("xy")).bound + li2.bound);
    CHECK(abs(g0.coeff(Word::from_string("xx")).value - lnz * lnz / 2) <= real_pow2(-245));
    CHECK(g0.coeff(Word()).value == 1);

    GroupLikeReport<BoundedReal> rep = is_group_like(g0, BoundedReal(real_pow2(-128)));
    CHECK(rep.pass);
  }
  SUBCASE("associator at degree 5") {
    NCSeries<BoundedReal> phi = build_Phi(5, real_pow2(-133));
    BoundedReal z2 = mzv_cached(MultiIndex{2}, real_pow2(-133));
    CHECK(phi.coeff(Word::from_string("x")).is_exact_zero());
    CHECK(phi.coeff(Word::from_string("y")).is_exact_zero());
    CHECK(abs(phi.coeff(Word::from_string("xy")).value + z2.value) <=
          phi.coeff(Word::from_string("xy")).bound + z2.bound);
    CHECK(abs(phi.coeff(Word::from_string("yx")).value - z2.value) <=
          phi.coeff(Word::from_string("yx")).bound + z2.bound);

    GroupLikeReport<BoundedReal> rep = is_group_like(phi, BoundedReal(real_pow2(-128)));
    CHECK(rep.pass);
  }
}

}  // namespace
