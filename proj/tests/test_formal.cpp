#include <doctest.h>

#include <optional>

#include "dualref/errors.hpp"
#include "dualref/formal.hpp"
#include "dualref/padic.hpp"
#include "dualref/rational.hpp"
#include "dualref/series.hpp"
#include "dualref/word.hpp"

namespace {

using namespace dualref;

TEST_CASE("coeff_pipeline reads off the telescoped word combination") {
  // (n,m) = (2,2): the combination is y(x sh e) = yx with global sign
  // (-1)^{n+m-2} = +1, so the pipeline returns +Coeff_{yx}.
  NCSeries<Rational> s(2);
  s.at(Word::from_string("yx")) = Rational(5, 3);
  s.at(Word::from_string("xy")) = Rational(9);  // must not contribute
  CHECK(coeff_pipeline(s, 2, 2) == Rational(5, 3));

  // (n,m) = (3,2): combination (+1)*yxy + (+1)*yyx, global sign (-1)^3 = -1.
  NCSeries<Rational> t(3);
  t.at(Word::from_string("yxy")) = Rational(2);
  t.at(Word::from_string("yyx")) = Rational(7);
  CHECK(coeff_pipeline(t, 3, 2) == Rational(-9));
}

TEST_CASE("full-range reflection sum collapses to the pipeline on group-like input") {
  // This is the telescoping identity in dictionary form: for group-like S
  // with lambda = Coeff_X(S),
  //   sum_{j=0}^{m-1} (-lambda)^j/j! (-1)^{n-1} Coeff_{w(1^{n-2}, m-j)}
  // equals the single word-combination coeff_pipeline(S, n, m).
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u, 17u, 23u, 31u}) {
    NCSeries<Rational> s = random_group_like<Rational>(seed, 8, std::nullopt, std::nullopt);
    Rational lambda = s.coeff(Word::single(Letter::X));
    for (int n = 2; n <= 4; ++n) {
      for (int m = 2; m <= 4; ++m) {
        if (n + m - 2 > 8) continue;
        CHECK(lhs_from_dictionary(s, lambda, n, m) == coeff_pipeline(s, n, m));
      }
    }
  }
}

TEST_CASE("reflection sum respects its truncation argument") {
  NCSeries<Rational> s = random_group_like<Rational>(11, 6, std::nullopt, std::nullopt);
  Rational lambda = s.coeff(Word::single(Letter::X));
  // j_max = m-1 is exactly lhs_from_dictionary
  CHECK(reflection_sum(s, lambda, 3, 3, 2) == lhs_from_dictionary(s, lambda, 3, 3));
  // one term: j = 0 only
  CHECK(reflection_sum(s, lambda, 3, 3, 0) ==
        Rational(1) * s.coeff(word_of_index(MultiIndex::ones_then(1, 3))));
}

TEST_CASE("formal theorem schema vanishes identically") {
  SUBCASE("spot checks across pairs and seeds") {
    for (std::uint64_t seed : {1u, 7u, 99u, 12345u}) {
      for (int n = 2; n <= 5; ++n) {
        for (int m = 2; m <= 5; ++m) {
          CHECK(formal_theorem_check(n, m, n + m - 2, seed) == 0);
        }
      }
    }
  }
  SUBCASE("degree larger than the minimum also vanishes") {
    CHECK(formal_theorem_check(2, 3, 6, 4) == 0);
    CHECK(formal_theorem_check(3, 3, 7, 8) == 0);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(formal_theorem_check(1, 3, 4, 1), index_error);
    CHECK_THROWS_AS(formal_theorem_check(3, 1, 4, 1), index_error);
    CHECK_THROWS_AS(formal_theorem_check(3, 3, 3, 1), degree_cap_error);  // degree < n+m-2
  }
}

TEST_CASE("simulated Galois data obey the composition and cocycle constraints") {
  PadicContext ctx = PadicContext::make(5, 30, 8);
  GaloisSimData sim = sample_galois_sim(3, ctx, 8);

  SUBCASE("group-like components") {
    CHECK(is_group_like(sim.f_delta).pass);
    CHECK(is_group_like(sim.f_prime).pass);
    CHECK(is_group_like(sim.f).pass);
  }
  SUBCASE("f = swap(f') * f_delta") {
    CHECK(sim.f == series_mul(swap_xy(sim.f_prime), sim.f_delta));
  }
  SUBCASE("f_delta has both degree-1 coefficients zero") {
    CHECK(sim.f_delta.coeff(Word::single(Letter::X)) == 0);
    CHECK(sim.f_delta.coeff(Word::single(Letter::Y)) == 0);
  }
  SUBCASE("cocycle values are derived, never sampled") {
    CHECK(sim.rho_1mz == -sim.f_prime.coeff(Word::single(Letter::X)));
    CHECK(sim.rho_z == -sim.f.coeff(Word::single(Letter::X)));
    // consistency through the product: Coeff_X(f) = Coeff_Y(f')
    CHECK(sim.rho_z == -sim.f_prime.coeff(Word::single(Letter::Y)));
  }
  SUBCASE("x-run ladder carries powers of the cocycle: Coeff_{X^j}(f) = (-rho)^j/j!") {
    Rational pw(1);
    for (int j = 1; j <= 8; ++j) {
      pw *= -sim.rho_z;
      pw /= Rational(j);
      CHECK(sim.f.coeff(Word::run(Letter::X, j)) == pw);
    }
  }
  SUBCASE("sampled exponents are l-integers in range") {
    // determinism: the same seed reproduces the same datum
    GaloisSimData again = sample_galois_sim(3, ctx, 8);
    CHECK(again.f == sim.f);
    CHECK(again.rho_z == sim.rho_z);
    GaloisSimData other = sample_galois_sim(4, ctx, 8);
    CHECK_FALSE(other.f == sim.f);
  }
}

TEST_CASE("l-adic theorem schema: exact zero and zero residues") {
  for (unsigned long l : {2ul, 3ul, 5ul}) {
    PadicContext ctx = PadicContext::make(l, 30, 6);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      LadicReport rep = formal_ladic_check(ctx, 3, 3, 6, seed);
      CHECK(rep.pass);
      CHECK(rep.residual == 0);
      CHECK(rep.residual_mod == 0);
      CHECK(rep.prime == l);
      CHECK(rep.rho_z_mod >= 0);
      CHECK(rep.rho_z_mod < ctx.modulus);
      CHECK(rep.rho_1mz_mod >= 0);
      CHECK(rep.rho_1mz_mod < ctx.modulus);
      CHECK(rep.rho_z_mod == reduce_mod(rep.rho_z, ctx));
    }
  }
  SUBCASE("reports are deterministic per seed") {
    PadicContext ctx = PadicContext::make(3, 30, 4);
    LadicReport a = formal_ladic_check(ctx, 2, 2, 4, 42);
    LadicReport b = formal_ladic_check(ctx, 2, 2, 4, 42);
    CHECK(a.rho_z == b.rho_z);
    CHECK(a.rho_1mz == b.rho_1mz);
    CHECK(a.residual == b.residual);
  }
}

TEST_CASE("shuffle lemma holds over the full acceptance rectangle") {
  for (int m = 2; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) {
      CHECK(shuffle_lemma_check(m, n));
    }
  }
}

}  // namespace
