#pragma once

#include <vector>

#include "dualref/real.hpp"
#include "dualref/word.hpp"

namespace dualref {

struct MzvBudget {
  long outer_terms = 1'000'000;  // direct-summation range N
  int em_terms = 5;              // Euler-Maclaurin correction pairs per tail
  int max_power = 40;            // 1/N-expansion truncation order
};

// Multiple zeta value zeta(k) for an admissible index of weight <= 8, with
// a certified absolute error bound.  Evaluation splits every summation
// tuple at the last variable <= N: the parts below N are exact partial sums
// from one dynamic-programming pass, the parts above N are restricted tails
// expanded asymptotically in 1/N via iterated Euler-Maclaurin summation.
// Throws precision_error if the certified bound misses `target`.
BoundedReal mzv_oracle(const MultiIndex& k, const Real& target, const MzvBudget& budget = {});

// Batch evaluation: shares the outer summation pass across all indices
// (the partial-sum states form a prefix trie).  Same contract per entry.
std::vector<BoundedReal> mzv_oracle_batch(const std::vector<MultiIndex>& ks, const Real& target,
                                          const MzvBudget& budget = {});

// Memoized front end: serves a cached value when its certified bound meets
// `target`, otherwise recomputes and tightens the cache entry.
BoundedReal mzv_cached(const MultiIndex& k, const Real& target, const MzvBudget& budget = {});

// Precomputes every admissible index of weight <= max_weight into the cache
// in one shared pass.
void mzv_warm_cache(int max_weight, const Real& target, const MzvBudget& budget = {});

}  // namespace dualref
