#pragma once

#include "dualref/rational.hpp"
#include "dualref/real.hpp"

namespace dualref {

// Exact Bernoulli number B_n (convention B_1 = -1/2), computed by the
// defining recurrence and cached for the life of the process.
const Rational& bernoulli(unsigned n);

// zeta(s) for integer s >= 2 with a certified absolute error bound at most
// 2^-target_bits.  Euler-Maclaurin off a direct partial sum; independent of
// the multiple-zeta oracle so the two can cross-check each other.
BoundedReal riemann_zeta(int s, unsigned target_bits);

}  // namespace dualref
