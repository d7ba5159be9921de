#include "dualref/formal.hpp"

namespace dualref {

Rational coeff_pipeline(const RationalSeries& s, int n, int m) {
  if (n < 2 || m < 2) throw index_error("coeff_pipeline requires n, m >= 2");
  if (n + m - 2 > s.degree()) throw degree_cap_error("coeff_pipeline: weight exceeds degree");
  WordSum ws = prepend(Letter::Y, shuffle_cached(Word::run(Letter::X, m - 1),
                                                 Word::run(Letter::Y, n - 2)));
  Rational acc(0);
  for (const auto& [w, mult] : ws) {
    acc += Rational(static_cast<long>(mult)) * s.coeff(w);
  }
  if ((n + m) % 2 != 0) acc = -acc;  // (-1)^{n+m-2}
  return acc;
}

Rational reflection_sum(const RationalSeries& s, const Rational& lambda, int n, int m,
                        int j_max) {
  if (n < 2 || m < 2) throw index_error("reflection_sum requires n, m >= 2");
  if (j_max < 0 || j_max > m - 1) throw index_error("reflection_sum: j_max out of range");
  if (n + m - 2 > s.degree()) throw degree_cap_error("reflection_sum: weight exceeds degree");
  Rational acc(0);
  Rational pw(1);  // (-lambda)^j / j!
  for (int j = 0; j <= j_max; ++j) {
    if (j > 0) {
      pw *= -lambda;
      pw /= Rational(j);
    }
    acc += pw * s.coeff(word_of_index(MultiIndex::ones_then(n - 2, m - j)));
  }
  if (n % 2 == 0) acc = -acc;  // (-1)^{n-1}
  return acc;
}

Rational lhs_from_dictionary(const RationalSeries& s, const Rational& lambda, int n, int m) {
  return reflection_sum(s, lambda, n, m, m - 1);
}

Rational formal_theorem_check(int n, int m, int degree, std::uint64_t seed) {
  if (degree < n + m - 2) throw degree_cap_error("formal_theorem_check: degree < n+m-2");
  RationalSeries g_prime =
      random_group_like<Rational>(seed, degree, std::nullopt, std::nullopt);
  RationalSeries phi_t =
      random_group_like<Rational>(seed + 1, degree, Rational(0), Rational(0));
  RationalSeries g = series_mul(swap_xy(g_prime), phi_t);
  Rational lambda = g.coeff(Word::single(Letter::X));
  Rational lambda_prime = g_prime.coeff(Word::single(Letter::X));
  Rational first = reflection_sum(g, lambda, n, m, m - 1);
  Rational second = reflection_sum(g_prime, lambda_prime, m, n, n - 2);
  Rational rhs = phi_t.coeff(word_of_index(MultiIndex::ones_then(n - 2, m)));
  if (n % 2 == 0) rhs = -rhs;  // (-1)^{n-1}
  return first + second - rhs;
}

GaloisSimData::GaloisSimData(RationalSeries fd, RationalSeries fp)
    : f_delta(std::move(fd)),
      f_prime(std::move(fp)),
      f(series_mul(swap_xy(f_prime), f_delta)),
      rho_1mz(-f_prime.coeff(Word::single(Letter::X))),
      rho_z(-f.coeff(Word::single(Letter::X))) {}

GaloisSimData sample_galois_sim(std::uint64_t seed, const PadicContext& ctx, int degree,
                                int factors) {
  if (factors < 1) throw index_error("sample_galois_sim: factors must be >= 1");
  LadicSampler sampler(seed, ctx);
  auto draw_factors = [&]() {
    std::vector<GroupFactor<Rational>> fs;
    for (int i = 0; i < factors; ++i) {
      Letter l = (i % 2 == 0) ? Letter::X : Letter::Y;
      fs.push_back({l, Rational(sampler.next_nonzero())});
    }
    return fs;
  };
  RationalSeries f_prime = group_like_from_factors<Rational>(draw_factors(), std::nullopt,
                                                             std::nullopt, degree);
  RationalSeries f_delta = group_like_from_factors<Rational>(draw_factors(), Rational(0),
                                                             Rational(0), degree);
  return GaloisSimData(std::move(f_delta), std::move(f_prime));
}

LadicReport formal_ladic_check(const PadicContext& ctx, int n, int m, int degree,
                               std::uint64_t seed) {
  if (degree < n + m - 2) throw degree_cap_error("formal_ladic_check: degree < n+m-2");
  GaloisSimData sim = sample_galois_sim(seed, ctx, degree);
  // lambda = Coeff_X = -rho on both series, so reflection_sum's (-lambda)^j
  // are exactly the rho^j of the l-adic statement.
  Rational first = reflection_sum(sim.f, -sim.rho_z, n, m, m - 1);
  Rational second = reflection_sum(sim.f_prime, -sim.rho_1mz, m, n, n - 2);
  Rational rhs = sim.f_delta.coeff(word_of_index(MultiIndex::ones_then(n - 2, m)));
  if (n % 2 == 0) rhs = -rhs;  // (-1)^{n-1}
  LadicReport rep;
  rep.prime = ctx.prime;
  rep.precision = ctx.precision;
  rep.n = n;
  rep.m = m;
  rep.degree = degree;
  rep.seed = seed;
  rep.residual = first + second - rhs;
  rep.residual_mod = reduce_mod(rep.residual, ctx);
  rep.rho_z = sim.rho_z;
  rep.rho_1mz = sim.rho_1mz;
  rep.rho_z_mod = reduce_mod(sim.rho_z, ctx);
  rep.rho_1mz_mod = reduce_mod(sim.rho_1mz, ctx);
  rep.pass = (rep.residual == 0) && (rep.residual_mod == 0);
  return rep;
}

bool shuffle_lemma_check(int m, int n) {
  if (m < 1 || n < 2) throw index_error("shuffle_lemma_check requires m >= 1, n >= 2");
  WordSum lhs = telescoped_shuffle_sum(m, n);
  WordSum rhs = prepend(Letter::Y, shuffle(Word::run(Letter::X, m - 1),
                                           Word::run(Letter::Y, n - 2)));
  if (m % 2 == 0) rhs *= -1;  // (-1)^{m-1}
  return lhs == rhs;
}

}  // namespace dualref
