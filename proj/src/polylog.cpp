#include "dualref/polylog.hpp"

#include <vector>

namespace dualref {

BoundedReal principal_log(const Real& z, unsigned target_bits) {
  if (!(z > 0)) throw domain_error("principal_log requires z > 0");
  const unsigned work = target_bits + 32;
  PrecisionGuard guard(work);
  Real v = log(at_working_precision(z));
  // Covers the log rounding and the re-rounding of z itself.
  Real b = rounding_eps(v) * 2 + real_pow2(-static_cast<long>(work) + 2);
  return BoundedReal(v, b);
}

BoundedReal mpl_series(const MultiIndex& k, const Real& z, unsigned target_bits) {
  if (k.depth() == 0) throw index_error("mpl_series requires a nonempty index");
  if (!(z > 0) || !(z <= Real("0.99"))) {
    throw domain_error("mpl_series requires 0 < z <= 0.99");
  }
  const int d = k.depth();
  const unsigned work = target_bits + 32;
  PrecisionGuard guard(work);

  // s[i] holds the depth-i partial sum over tuples with all variables <= n;
  // the contribution of outer variable n uses s[d-1] before the update.
  std::vector<Real> s(static_cast<std::size_t>(d), Real(0));
  Real x = at_working_precision(z);
  Real zn(1);  // z^n
  Real acc(0);
  Real target = real_pow2(-static_cast<long>(target_bits) - 2);
  const long hard_cap = 4'000'000;

  long n = 0;
  Real tail_bound;
  for (;;) {
    ++n;
    if (n > hard_cap) throw precision_error("mpl_series: term cap exhausted");
    zn *= x;
    Real nr(n);
    Real inner = (d == 1) ? Real(1) : s[static_cast<std::size_t>(d - 2)];
    if (!(inner == 0)) {
      acc += zn / pow(nr, k.parts.back()) * inner;
    }
    for (int i = d - 2; i >= 0; --i) {
      Real prev = (i == 0) ? Real(1) : s[static_cast<std::size_t>(i - 1)];
      s[static_cast<std::size_t>(i)] += prev / pow(nr, k.parts[static_cast<std::size_t>(i)]);
    }
    // Tail: sum_{n > N} n^{d-1} z^n <= r^{d-1} z^r / (1 - q) with r = N+1
    // and q = z e^{(d-1)/r}, valid once q < 1 (n^{d-1} dominates every
    // depth-(d-1) inner partial sum).
    if (n % 16 == 0 || n < 4) {
      Real r(n + 1);
      Real q = x * exp(Real(d - 1) / r);
      if (q < 1) {
        tail_bound = pow(r, d - 1) * pow(x, n + 1) / (1 - q);
        if (tail_bound < target) break;
      }
    }
  }

  // Positive-term accumulation: relative rounding ~ (ops per element) ulps;
  // the constant absorbs the re-rounding of z through the derivative bound.
  Real slop = (abs(acc) + 1) * Real(n * (d + 2)) * real_pow2(-static_cast<long>(work) + 4) +
              real_pow2(-static_cast<long>(work) + 10);
  return BoundedReal(acc, tail_bound + slop);
}

}  // namespace dualref
