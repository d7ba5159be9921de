#pragma once

#include <cstdint>

#include "dualref/padic.hpp"
#include "dualref/rational.hpp"
#include "dualref/series.hpp"

namespace dualref {

using RationalSeries = NCSeries<Rational>;

// (-1)^{n+m-2} * sum of mult(w) * Coeff_w(S) over Y (X^{m-1} sh Y^{n-2}),
// the word combination the telescoping argument lands on.
Rational coeff_pipeline(const RationalSeries& s, int n, int m);

// sum_{j=0}^{j_max} (-lambda)^j / j! * (-1)^{n-1} * Coeff_{w(1^{n-2}, m-j)}(S):
// the reflection sum in dictionary form.  For the first sum of the main
// identity j_max = m-1; the second sum stops at j_max = n-2 (with the roles
// of n and m exchanged by the caller).  In the l-adic reading lambda is
// -rho, so (-lambda)^j realizes the rho^j/j! prefactors.
Rational reflection_sum(const RationalSeries& s, const Rational& lambda, int n, int m, int j_max);

// The full-range reflection sum (j_max = m-1).  For group-like S with
// lambda = Coeff_X(S) it collapses to coeff_pipeline(S, n, m).
Rational lhs_from_dictionary(const RationalSeries& s, const Rational& lambda, int n, int m);

// Theorem schema over surrogate associators: builds G' (free degree-1
// coefficients) and Phi~ (both zero) from the seed, forms
// G = swap(G') * Phi~, and returns
//   first-sum(G) + second-sum(G') - (-1)^{n-1} Coeff_{w(1^{n-2}, m)}(Phi~),
// which must vanish identically.  Exact over the rationals.
Rational formal_theorem_check(int n, int m, int degree, std::uint64_t seed);

// Simulated Galois datum: a triple of group-like series tied together by
// the composition-of-paths product, with the cocycle values derived (never
// sampled) from the degree-1 coefficients.
struct GaloisSimData {
  RationalSeries f_delta;  // both degree-1 coefficients zero
  RationalSeries f_prime;  // unconstrained
  RationalSeries f;        // swap_xy(f_prime) * f_delta
  Rational rho_1mz;        // -Coeff_X(f_prime)
  Rational rho_z;          // -Coeff_X(f)

  GaloisSimData(RationalSeries fd, RationalSeries fp);
};

// Samples the exponential factors from the l-adic integer stream of ctx.
GaloisSimData sample_galois_sim(std::uint64_t seed, const PadicContext& ctx, int degree,
                                int factors = 4);

struct LadicReport {
  unsigned long prime = 2;
  int precision = 0;
  int n = 0, m = 0, degree = 0;
  std::uint64_t seed = 0;
  Rational residual;      // exact; the contract is 0
  Integer residual_mod;   // reduce_mod of the residual
  Rational rho_z, rho_1mz;
  Integer rho_z_mod, rho_1mz_mod;
  bool pass = false;
};

// l-adic theorem schema: same engine over a sampled GaloisSimData, with
// residues reported mod l^N.  rho^j/j! prefactors enter through
// reflection_sum with lambda = Coeff_X (= -rho).
LadicReport formal_ladic_check(const PadicContext& ctx, int n, int m, int degree,
                               std::uint64_t seed);

// telescoped_shuffle_sum(m, n) == (-1)^{m-1} Y (X^{m-1} sh Y^{n-2}).
bool shuffle_lemma_check(int m, int n);

}  // namespace dualref
