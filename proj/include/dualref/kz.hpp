#pragma once

#include <vector>

#include "dualref/mzv.hpp"
#include "dualref/polylog.hpp"
#include "dualref/series.hpp"

namespace dualref {

// Base point for the numeric lens: real z on the straight path in (0,1),
// principal branches throughout.  Constructing one validates the domain.
struct PathConvention {
  Real z;
  explicit PathConvention(const Real& z_);
};

// Fundamental-solution coefficient table at z: values on Y-ending words are
// (-1)^depth * Li_index(z), Coeff_X = ln z, everything else filled by the
// one-sided shuffle-character extension.
NCSeries<BoundedReal> build_G0(const Real& z, int degree, unsigned target_bits);

// Associator coefficient table: values on convergent words are
// (-1)^depth * zeta(index) from the oracle, Coeff_X = Coeff_Y = 0, filled
// by the two-sided extension.
NCSeries<BoundedReal> build_Phi(int degree, const Real& coeff_target, const MzvBudget& budget = {});

// The two reflection sums of the main identity, exposed separately so
// endpoint behaviour can be probed.
BoundedReal main1_first_sum(int n, int m, const Real& z, unsigned target_bits);
BoundedReal main1_second_sum(int n, int m, const Real& z, unsigned target_bits);

struct Main1Record {
  int n = 0, m = 0;
  Real z;
  BoundedReal lhs_first_sum, lhs_second_sum, lhs_total, rhs;
  Real residual;
};

// Oracle mode: compares the z-dependent left side against the zeta oracle.
// Requires n, m >= 2 and weight n+m-2 <= 8.
Main1Record verify_main1_numeric(int n, int m, const Real& z, unsigned target_bits,
                                 const Real& oracle_target);

struct ConstancyRecord {
  int n = 0, m = 0;
  std::vector<Real> zs;
  std::vector<BoundedReal> totals;
  Real max_variation;
};

// Constancy mode: the left side evaluated across a z-grid must agree with
// itself; no oracle involved.
ConstancyRecord verify_main1_constancy(int n, int m, const std::vector<Real>& zs,
                                       unsigned target_bits);

struct ChainRuleRecord {
  Real z;
  int degree = 0;
  Real max_residual;
  Word worst_word;
};

// Coefficient-wise residual of G0(z) against swap(G0(1-z)) * Phi.
ChainRuleRecord verify_chain_rule_numeric(const Real& z, int degree, unsigned target_bits,
                                          const Real& phi_target, const MzvBudget& budget = {});

struct DualityRecord {
  int n = 0, m = 0;
  MultiIndex lhs_index, rhs_index;
  BoundedReal lhs, rhs;
  Real residual;
};

// zeta(1^{m-2}, n) vs zeta(1^{n-2}, m), both sides from independent oracle
// evaluations.
DualityRecord verify_duality_numeric(int n, int m, const Real& oracle_target);

}  // namespace dualref
