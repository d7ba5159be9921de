#include "dualref/kz.hpp"

#include <map>

namespace dualref {

PathConvention::PathConvention(const Real& z_) : z(z_) {
  if (!(z > 0) || !(z < 1)) {
    throw domain_error("path base point must satisfy 0 < z < 1");
  }
}

namespace {

template <class F>
void for_each_y_ending(int degree, F&& f) {
  for_each_word(degree, [&](const Word& w) {
    if (!w.empty() && w.last() == Letter::Y) f(w);
  });
}

}  // namespace

NCSeries<BoundedReal> build_G0(const Real& z, int degree, unsigned target_bits) {
  PathConvention path(z);
  PrecisionGuard guard(target_bits + 32);
  std::map<Word, BoundedReal> y_values;
  for_each_y_ending(degree, [&](const Word& w) {
    MultiIndex k = index_of_word(w);
    BoundedReal v = mpl_series(k, path.z, target_bits);
    y_values.emplace(w, k.depth() % 2 == 0 ? v : -v);
  });
  BoundedReal x_value = principal_log(path.z, target_bits);
  return character_extend(y_values, x_value, degree);
}

NCSeries<BoundedReal> build_Phi(int degree, const Real& coeff_target, const MzvBudget& budget) {
  // One shared pass warms every admissible index that will be requested.
  mzv_warm_cache(degree, coeff_target, budget);
  std::map<Word, BoundedReal> conv_values;
  for_each_y_ending(degree, [&](const Word& w) {
    if (w.first() != Letter::X) return;
    MultiIndex k = index_of_word(w);
    BoundedReal v = mzv_cached(k, coeff_target, budget);
    conv_values.emplace(w, k.depth() % 2 == 0 ? v : -v);
  });
  return character_extend_two_sided(conv_values, degree);
}

BoundedReal main1_first_sum(int n, int m, const Real& z, unsigned target_bits) {
  if (n < 2 || m < 2) throw index_error("reflection sums require n, m >= 2");
  PathConvention path(z);
  PrecisionGuard guard(target_bits + 32);
  BoundedReal log_z = principal_log(path.z, target_bits);
  BoundedReal pw(1);  // (-ln z)^j / j!
  BoundedReal sum;
  for (int j = 0; j <= m - 1; ++j) {
    if (j > 0) {
      pw *= -log_z;
      pw /= j;
    }
    BoundedReal li = mpl_series(MultiIndex::ones_then(n - 2, m - j), path.z, target_bits);
    sum += pw * li;
  }
  return sum;
}

BoundedReal main1_second_sum(int n, int m, const Real& z, unsigned target_bits) {
  if (n < 2 || m < 2) throw index_error("reflection sums require n, m >= 2");
  PathConvention path(z);
  const unsigned work = target_bits + 32;
  PrecisionGuard guard(work);
  Real z1 = Real(1) - at_working_precision(path.z);
  BoundedReal log_z1 = principal_log(z1, target_bits);
  BoundedReal pw(1);  // (-ln(1-z))^j / j!
  BoundedReal sum;
  for (int j = 0; j <= n - 2; ++j) {
    if (j > 0) {
      pw *= -log_z1;
      pw /= j;
    }
    BoundedReal li = mpl_series(MultiIndex::ones_then(m - 2, n - j), z1, target_bits);
    sum += pw * li;
  }
  // Forming 1-z rounds once; the integrand's z-derivative is bounded at
  // desk scale, so one extra ulp-level term covers it.
  sum.bound += real_pow2(-static_cast<long>(work) + 8);
  return sum;
}

Main1Record verify_main1_numeric(int n, int m, const Real& z, unsigned target_bits,
                                 const Real& oracle_target) {
  if (n + m - 2 > 8) throw domain_error("oracle mode requires weight n+m-2 <= 8");
  Main1Record rec;
  rec.n = n;
  rec.m = m;
  rec.z = z;
  rec.lhs_first_sum = main1_first_sum(n, m, z, target_bits);
  rec.lhs_second_sum = main1_second_sum(n, m, z, target_bits);
  rec.lhs_total = rec.lhs_first_sum + rec.lhs_second_sum;
  rec.rhs = mzv_cached(MultiIndex::ones_then(n - 2, m), oracle_target);
  PrecisionGuard guard(target_bits + 32);
  rec.residual = abs(rec.lhs_total.value - rec.rhs.value);
  return rec;
}

ConstancyRecord verify_main1_constancy(int n, int m, const std::vector<Real>& zs,
                                       unsigned target_bits) {
  if (zs.empty()) throw index_error("constancy check needs at least one z");
  ConstancyRecord rec;
  rec.n = n;
  rec.m = m;
  rec.zs = zs;
  for (const Real& z : zs) {
    BoundedReal total = main1_first_sum(n, m, z, target_bits) +
                        main1_second_sum(n, m, z, target_bits);
    rec.totals.push_back(total);
  }
  PrecisionGuard guard(target_bits + 32);
  Real max_var(0);
  for (std::size_t i = 0; i < rec.totals.size(); ++i) {
    for (std::size_t j = i + 1; j < rec.totals.size(); ++j) {
      Real d = abs(rec.totals[i].value - rec.totals[j].value);
      if (d > max_var) max_var = d;
    }
  }
  rec.max_variation = max_var;
  return rec;
}

ChainRuleRecord verify_chain_rule_numeric(const Real& z, int degree, unsigned target_bits,
                                          const Real& phi_target, const MzvBudget& budget) {
  PathConvention path(z);
  const unsigned work = target_bits + 32;
  ChainRuleRecord rec;
  rec.z = z;
  rec.degree = degree;
  NCSeries<BoundedReal> lhs = build_G0(path.z, degree, target_bits);
  PrecisionGuard guard(work);
  Real z1 = Real(1) - at_working_precision(path.z);
  NCSeries<BoundedReal> g0_mirror = build_G0(z1, degree, target_bits);
  NCSeries<BoundedReal> phi = build_Phi(degree, phi_target, budget);
  NCSeries<BoundedReal> rhs = series_mul(swap_xy(g0_mirror), phi);
  Real max_res(0);
  Word worst;
  for_each_word(degree, [&](const Word& w) {
    Real d = abs(lhs.coeff(w).value - rhs.coeff(w).value);
    if (d > max_res) {
      max_res = d;
      worst = w;
    }
  });
  rec.max_residual = max_res;
  rec.worst_word = worst;
  return rec;
}

DualityRecord verify_duality_numeric(int n, int m, const Real& oracle_target) {
  if (n < 2 || m < 2) throw index_error("duality check requires n, m >= 2");
  DualityRecord rec;
  rec.n = n;
  rec.m = m;
  rec.lhs_index = MultiIndex::ones_then(m - 2, n);
  rec.rhs_index = MultiIndex::ones_then(n - 2, m);
  rec.lhs = mzv_cached(rec.lhs_index, oracle_target);
  rec.rhs = mzv_cached(rec.rhs_index, oracle_target);
  PrecisionGuard guard(160);
  rec.residual = abs(rec.lhs.value - rec.rhs.value);
  return rec;
}

}  // namespace dualref
