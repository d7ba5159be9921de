#pragma once

#include "dualref/real.hpp"
#include "dualref/word.hpp"

namespace dualref {

// Principal natural logarithm for real z > 0 (negative on (0,1)), with a
// rounding-level error bound.
BoundedReal principal_log(const Real& z, unsigned target_bits);

// Multiple polylogarithm Li_k(z) = sum over 0 < n_1 < ... < n_d of
// z^{n_d} / (n_1^{k_1} ... n_d^{k_d}), evaluated by the nested-sum DP with
// a certified geometric tail bound.  Requires 0 < z <= 0.99 (real lens) and
// a nonempty index; admissibility is not required away from z = 1.
BoundedReal mpl_series(const MultiIndex& k, const Real& z, unsigned target_bits);

}  // namespace dualref
