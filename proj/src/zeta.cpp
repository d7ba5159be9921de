#include "dualref/zeta.hpp"

#include <mutex>
#include <vector>

namespace dualref {

const Rational& bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1 solves for B_k.
  while (cache.size() <= n) {
    unsigned k = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned j = 0; j < k; ++j) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), k + 1, j);
      acc += Rational(c) * cache[j];
    }
    cache.push_back(-acc / Rational(Integer(k + 1)));
  }
  return cache[n];
}

BoundedReal riemann_zeta(int s, unsigned target_bits) {
  if (s < 2) throw domain_error("riemann_zeta requires s >= 2");
  const unsigned work = target_bits + 32;
  PrecisionGuard guard(work);

  const long M = 1000;
  Real sum(0);
  for (long n = 1; n <= M; ++n) {
    Real t(n);
    sum += Real(1) / pow(t, s);
  }
  Real rM(M);
  // Integral and half-term corrections: M^{1-s}/(s-1) + M^{-s}/2.
  sum += pow(rM, 1 - s) / (s - 1);
  sum -= pow(rM, -s) / 2;
  // Correction terms B_{2j}/(2j)! * rising(s, 2j-1) * M^{-s-2j+1}; stop when
  // a term falls below the target, and bound the remainder by the first
  // omitted term (the series is enveloping for this integrand).
  Real target = real_pow2(-static_cast<long>(target_bits) - 2);
  Real rising(1);  // s (s+1) ... (s + len - 1)
  int arg = s;
  Real term_bound;
  bool converged = false;
  for (int j = 1; j <= 60; ++j) {
    rising *= arg++;  // extend product to length 2j-1
    if (j > 1) rising *= arg++;
    Real coeff = real_from_rational(bernoulli(2 * static_cast<unsigned>(j)));
    Real fac;
    mpfr_fac_ui(fac.backend().data(), 2 * static_cast<unsigned>(j), MPFR_RNDN);
    Real term = coeff / fac * rising * pow(rM, -s - 2 * j + 1);
    term_bound = abs(term);
    if (term_bound < target) {
      converged = true;
      break;
    }
    sum += term;
  }
  if (!converged) throw precision_error("riemann_zeta: correction terms did not converge");
  // Rounding slop: ~M+60 positive-term operations at `work` bits.
  Real slop = abs(sum) * real_pow2(-static_cast<long>(work) + 14);
  return BoundedReal(sum, term_bound + slop);
}

}  // namespace dualref
