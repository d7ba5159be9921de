#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "dualref/rational.hpp"

namespace dualref {

// Sentinel for the valuation of zero.
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

// Fixed prime, working precision, and denominator budget for l-adic
// reduction and reporting.  Residues live in [0, l^precision).  The
// denominator budget tracks v_l(n!) for n up to the series degree via
// Legendre's bound n/(l-1); exponential truncations introduce exactly those
// factorials, and staying under the budget guarantees reduce_mod succeeds
// on every scalar the formal engine reports.
struct PadicContext {
  unsigned long prime = 2;
  int precision = 30;
  int denom_budget = 0;
  Integer modulus;  // prime^precision

  static PadicContext make(unsigned long prime, int precision, int degree);
};

// l-adic valuation of a nonzero rational; kValuationInfinity for zero.
long valuation(const Rational& q, unsigned long prime);

// Canonical residue of q mod l^N for q with nonnegative valuation.
// Throws padic_error when the denominator is divisible by l.
Integer reduce_mod(const Rational& q, const PadicContext& ctx);

// Deterministic stream of uniform draws from [0, l^N).  Values wider than
// 64 bits are assembled from successive engine words with rejection, so the
// stream depends only on the seed and the context.
class LadicSampler {
 public:
  LadicSampler(std::uint64_t seed, const PadicContext& ctx);

  Integer next();
  Integer next_nonzero();

 private:
  std::mt19937_64 rng_;
  Integer modulus_;
  int bits_;
};

// One-shot uniform draw from [0, l^N).
Integer random_l_integer(std::uint64_t seed, const PadicContext& ctx);

}  // namespace dualref
