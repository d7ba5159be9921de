#include "dualref/padic.hpp"

namespace dualref {

PadicContext PadicContext::make(unsigned long prime, int precision, int degree) {
  if (prime < 2) throw padic_error("prime must be >= 2");
  Integer p(static_cast<long>(prime));
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw padic_error(std::to_string(prime) + " is not prime");
  }
  if (precision < 1) throw padic_error("l-adic precision must be >= 1");
  if (degree < 0) throw padic_error("negative degree");
  PadicContext ctx;
  ctx.prime = prime;
  ctx.precision = precision;
  // ceil(degree / (prime - 1)) >= v_l(degree!)
  ctx.denom_budget = static_cast<int>((static_cast<unsigned>(degree) + prime - 2) / (prime - 1));
  ctx.modulus = integer_pow(p, static_cast<unsigned>(precision));
  return ctx;
}

long valuation(const Rational& q, unsigned long prime) {
  if (prime < 2) throw padic_error("prime must be >= 2");
  if (q == 0) return kValuationInfinity;
  Integer p(static_cast<long>(prime));
  Integer tmp;
  long vnum = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
  long vden = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
  return vnum - vden;
}

Integer reduce_mod(const Rational& q, const PadicContext& ctx) {
  Integer den = q.get_den();
  Integer r;
  if (mpz_divisible_ui_p(den.get_mpz_t(), ctx.prime)) {
    throw padic_error("denominator of " + rational_to_string(q) + " is divisible by " +
                      std::to_string(ctx.prime));
  }
  Integer deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), ctx.modulus.get_mpz_t()) == 0) {
    throw padic_error("denominator not invertible modulo l^N");  // unreachable for valid input
  }
  r = q.get_num() * deninv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), ctx.modulus.get_mpz_t());
  return r;
}

LadicSampler::LadicSampler(std::uint64_t seed, const PadicContext& ctx)
    : rng_(seed), modulus_(ctx.modulus) {
  if (modulus_ < 2) throw padic_error("sampler modulus must be >= 2");
  // Width of modulus - 1: drawing that many bits gives acceptance > 1/2.
  Integer top = modulus_ - 1;
  bits_ = static_cast<int>(mpz_sizeinbase(top.get_mpz_t(), 2));
}

Integer LadicSampler::next() {
  // Rejection sampling over fixed-width bit strings assembled from engine
  // words, least-significant chunk first.
  const int words = (bits_ + 63) / 64;
  const Integer mask = (Integer(1) << bits_) - 1;
  for (;;) {
    Integer v = 0;
    for (int i = 0; i < words; ++i) {
      std::uint64_t word = rng_();
      Integer chunk;
      mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      v |= chunk << (64 * i);
    }
    v &= mask;
    if (v < modulus_) return v;
  }
}

Integer LadicSampler::next_nonzero() {
  for (;;) {
    Integer v = next();
    if (v != 0) return v;
  }
}

Integer random_l_integer(std::uint64_t seed, const PadicContext& ctx) {
  return LadicSampler(seed, ctx).next();
}

}  // namespace dualref
