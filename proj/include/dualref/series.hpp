#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "dualref/scalar_traits.hpp"
#include "dualref/word.hpp"

namespace dualref {

// Truncated noncommutative formal power series over a scalar ring R: one
// coefficient per word of length <= degree, stored densely.  Slot layout is
// (2^len - 1) + bits, so words of each length occupy a contiguous block.
template <class R>
class NCSeries {
 public:
  explicit NCSeries(int degree)
      : degree_(check_degree(degree)),
        c_(static_cast<std::size_t>((2u << degree) - 1), scalar_ops<R>::zero()) {}

  static NCSeries unit(int degree) {
    NCSeries s(degree);
    s.at(Word()) = scalar_ops<R>::one();
    return s;
  }

  int degree() const { return degree_; }

  const R& coeff(const Word& w) const { return c_[slot(w)]; }
  R& at(const Word& w) { return c_[slot(w)]; }

  const R& coeff_packed(int len, std::uint32_t bits) const {
    return c_[static_cast<std::size_t>(((1u << len) - 1u) + bits)];
  }
  R& at_packed(int len, std::uint32_t bits) {
    return c_[static_cast<std::size_t>(((1u << len) - 1u) + bits)];
  }

  friend bool operator==(const NCSeries& a, const NCSeries& b) = default;

 private:
  static int check_degree(int d) {
    if (d < 0 || d > kMaxWordLength) {
      throw degree_cap_error("series degree " + std::to_string(d) + " out of range");
    }
    return d;
  }

  std::size_t slot(const Word& w) const {
    if (w.length() > degree_) {
      throw degree_cap_error("word '" + w.str() + "' exceeds series degree " +
                             std::to_string(degree_));
    }
    return static_cast<std::size_t>(((1u << w.length()) - 1u) + w.bits());
  }

  int degree_;
  std::vector<R> c_;
};

// Calls f(word) for every word of length <= maxlen, ordered by (length, bits).
template <class F>
void for_each_word(int maxlen, F&& f) {
  for (int len = 0; len <= maxlen; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      f(Word::from_bits(bits, len));
    }
  }
}

template <class R>
const R& series_coeff(const NCSeries<R>& s, const Word& w) {
  return s.coeff(w);
}

// Cauchy product truncated at the common degree.
template <class R>
NCSeries<R> series_mul(const NCSeries<R>& s, const NCSeries<R>& t) {
  if (s.degree() != t.degree()) {
    throw index_error("series_mul: degree mismatch");
  }
  const int d = s.degree();
  NCSeries<R> out(d);
  for (int lu = 0; lu <= d; ++lu) {
    for (std::uint32_t u = 0; u < (1u << lu); ++u) {
      const R& su = s.coeff_packed(lu, u);
      if (scalar_ops<R>::is_zero(su)) continue;
      for (int lv = 0; lv + lu <= d; ++lv) {
        for (std::uint32_t v = 0; v < (1u << lv); ++v) {
          const R& tv = t.coeff_packed(lv, v);
          if (scalar_ops<R>::is_zero(tv)) continue;
          out.at_packed(lu + lv, u | (v << lu)) += su * tv;
        }
      }
    }
  }
  return out;
}

template <class R>
NCSeries<R> operator*(const NCSeries<R>& s, const NCSeries<R>& t) {
  return series_mul(s, t);
}

// Letter-exchange automorphism: Coeff_w of the result is Coeff_{swap(w)}.
template <class R>
NCSeries<R> swap_xy(const NCSeries<R>& s) {
  NCSeries<R> out(s.degree());
  for_each_word(s.degree(), [&](const Word& w) { out.at(w) = s.coeff(w.swapped()); });
  return out;
}

// sum_{n <= D} a^n L^n / n!.
template <class R>
NCSeries<R> exp_letter(Letter l, const R& a, int degree) {
  NCSeries<R> out = NCSeries<R>::unit(degree);
  R c = scalar_ops<R>::one();
  for (int n = 1; n <= degree; ++n) {
    c *= a;
    scalar_ops<R>::div_by_long(c, n);
    out.at(Word::run(l, n)) = c;
  }
  return out;
}

// One factor of a free-group word: generator and (nonzero) exponent.
template <class R>
struct GroupFactor {
  Letter gen;
  R exponent;
};

// Ordered product of exponentials, the multiplicative embedding of a
// free-group word into the power-series algebra.
template <class R>
NCSeries<R> magnus_embed(const std::vector<GroupFactor<R>>& g, int degree) {
  NCSeries<R> out = NCSeries<R>::unit(degree);
  for (const auto& f : g) {
    if (scalar_ops<R>::is_zero(f.exponent)) {
      throw index_error("magnus_embed: zero exponent");
    }
    out = series_mul(out, exp_letter(f.gen, f.exponent, degree));
  }
  return out;
}

template <class R>
struct GroupLikeReport {
  bool pass = true;
  R max_violation = scalar_ops<R>::zero();
  Word worst_left, worst_right;  // the witness pair for max_violation
};

// Shuffle-character test: constant term 1 and
// Coeff_u * Coeff_v = sum_w mult(w) Coeff_w over u sh v, for every pair of
// nonempty words with |u| + |v| <= degree.  Exact fields pass tol = 0.
template <class R>
GroupLikeReport<R> is_group_like(const NCSeries<R>& s, const R& tol = scalar_ops<R>::zero()) {
  GroupLikeReport<R> rep;
  auto record = [&](const R& diff, const Word& u, const Word& v) {
    if (!scalar_ops<R>::within(diff, tol)) rep.pass = false;
    if (scalar_ops<R>::abs_greater(diff, rep.max_violation)) {
      rep.max_violation = scalar_ops<R>::abs_val(diff);
      rep.worst_left = u;
      rep.worst_right = v;
    }
  };
  record(s.coeff(Word()) - scalar_ops<R>::one(), Word(), Word());
  const int d = s.degree();
  for (int lu = 1; lu <= d - 1; ++lu) {
    for (std::uint32_t ub = 0; ub < (1u << lu); ++ub) {
      Word u = Word::from_bits(ub, lu);
      for (int lv = lu; lv + lu <= d; ++lv) {
        for (std::uint32_t vb = (lv == lu ? ub : 0u); vb < (1u << lv); ++vb) {
          Word v = Word::from_bits(vb, lv);
          R expect = s.coeff(u) * s.coeff(v);
          R actual = scalar_ops<R>::zero();
          for (const auto& [w, mult] : shuffle_cached(u, v)) {
            actual += s.coeff(w) * scalar_ops<R>::from_long(static_cast<long>(mult));
          }
          record(actual - expect, u, v);
        }
      }
    }
  }
  return rep;
}

// Multiplicative inverse: requires an invertible constant term; the unique
// T with S T = 1 up to the degree bound.
template <class R>
NCSeries<R> series_inverse(const NCSeries<R>& s) {
  if (scalar_ops<R>::is_zero(s.coeff(Word()))) {
    throw domain_error("series_inverse: zero constant term");
  }
  const int d = s.degree();
  R c0inv = scalar_ops<R>::inv(s.coeff(Word()));
  NCSeries<R> out(d);
  out.at(Word()) = c0inv;
  for (int len = 1; len <= d; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      Word w = Word::from_bits(bits, len);
      // Coeff_w(S T) = 0  =>  c0 T_w = -sum_{u nonempty prefix} S_u T_{w/u}.
      R acc = scalar_ops<R>::zero();
      for (int i = 1; i <= len; ++i) {
        const R& su = s.coeff(w.prefix(i));
        if (scalar_ops<R>::is_zero(su)) continue;
        acc += su * out.coeff(w.suffix_from(i));
      }
      out.at(w) = -(c0inv * acc);
    }
  }
  return out;
}

// Unique shuffle character with prescribed values on Y-ending words and on
// X.  Coeff_{X^a} = x_value^a / a!; every other X-ending word u X^a (u ends
// in Y) is filled by the trailing-run recursion
//   Coeff_{u X^a} = Coeff_u Coeff_{X^a} - sum_{w' != u X^a} mult(w') Coeff_{w'}
// over u sh X^a, whose other terms all have trailing X-run < a.
template <class R>
NCSeries<R> character_extend(const std::map<Word, R>& y_values, const R& x_value, int degree) {
  NCSeries<R> out = NCSeries<R>::unit(degree);
  for_each_word(degree, [&](const Word& w) {
    if (w.empty() || w.last() != Letter::Y) return;
    auto it = y_values.find(w);
    if (it == y_values.end()) {
      throw index_error("character_extend: missing value for word '" + w.str() + "'");
    }
    out.at(w) = it->second;
  });
  {
    R c = scalar_ops<R>::one();
    for (int a = 1; a <= degree; ++a) {
      c *= x_value;
      scalar_ops<R>::div_by_long(c, a);
      out.at(Word::run(Letter::X, a)) = c;
    }
  }
  for (int a = 1; a <= degree; ++a) {
    Word xa = Word::run(Letter::X, a);
    for_each_word(degree - a, [&](const Word& u) {
      if (u.empty() || u.last() != Letter::Y) return;
      Word w = u.concat(xa);
      R val = out.coeff(u) * out.coeff(xa);
      for (const auto& [wp, mult] : shuffle_cached(u, xa)) {
        if (wp == w) continue;  // appears with multiplicity exactly 1
        val -= out.coeff(wp) * scalar_ops<R>::from_long(static_cast<long>(mult));
      }
      out.at(w) = val;
    });
  }
  return out;
}

// Two-sided extension: prescribed values on convergent words (start with X,
// end with Y), Coeff_X = Coeff_Y = 0.  Y-ending words acquire values by the
// mirror-image leading-run recursion (Coeff_{Y^b} = 0 for b >= 1), then the
// trailing-run recursion above fills the X-ending words with Coeff_{X^a} = 0.
template <class R>
NCSeries<R> character_extend_two_sided(const std::map<Word, R>& conv_values, int degree) {
  NCSeries<R> out = NCSeries<R>::unit(degree);
  for_each_word(degree, [&](const Word& w) {
    if (w.empty() || w.first() != Letter::X || w.last() != Letter::Y) return;
    auto it = conv_values.find(w);
    if (it == conv_values.end()) {
      throw index_error("character_extend_two_sided: missing value for word '" + w.str() + "'");
    }
    out.at(w) = it->second;
  });
  // Y-ending words with a leading Y-run: Coeff_{Y^b} Coeff_u = 0, so the
  // leading term is cancelled purely by interleavings with a shorter run.
  for (int b = 1; b <= degree; ++b) {
    Word yb = Word::run(Letter::Y, b);
    out.at(yb) = scalar_ops<R>::zero();
    for_each_word(degree - b, [&](const Word& u) {
      if (u.empty() || u.first() != Letter::X || u.last() != Letter::Y) return;
      Word w = yb.concat(u);
      R val = scalar_ops<R>::zero();
      for (const auto& [wp, mult] : shuffle_cached(yb, u)) {
        if (wp == w) continue;
        val -= out.coeff(wp) * scalar_ops<R>::from_long(static_cast<long>(mult));
      }
      out.at(w) = val;
    });
  }
  for (int a = 1; a <= degree; ++a) {
    Word xa = Word::run(Letter::X, a);
    out.at(xa) = scalar_ops<R>::zero();
    for_each_word(degree - a, [&](const Word& u) {
      if (u.empty() || u.last() != Letter::Y) return;
      Word w = u.concat(xa);
      R val = scalar_ops<R>::zero();
      for (const auto& [wp, mult] : shuffle_cached(u, xa)) {
        if (wp == w) continue;
        val -= out.coeff(wp) * scalar_ops<R>::from_long(static_cast<long>(mult));
      }
      out.at(w) = val;
    });
  }
  return out;
}

// Product of the given exponential factors, then right-multiplied by
// exp(cX) and exp(c'Y) so that the degree-1 coefficients land exactly on
// the requested constraints (the Y factor does not disturb Coeff_X).
template <class R>
NCSeries<R> group_like_from_factors(const std::vector<GroupFactor<R>>& factors,
                                    const std::optional<R>& constraint_x,
                                    const std::optional<R>& constraint_y, int degree) {
  NCSeries<R> out = NCSeries<R>::unit(degree);
  for (const auto& f : factors) {
    if (scalar_ops<R>::is_zero(f.exponent)) continue;
    out = series_mul(out, exp_letter(f.gen, f.exponent, degree));
  }
  if (degree >= 1) {
    if (constraint_x) {
      R c = *constraint_x - out.coeff(Word::single(Letter::X));
      if (!scalar_ops<R>::is_zero(c)) {
        out = series_mul(out, exp_letter(Letter::X, c, degree));
      }
    }
    if (constraint_y) {
      R c = *constraint_y - out.coeff(Word::single(Letter::Y));
      if (!scalar_ops<R>::is_zero(c)) {
        out = series_mul(out, exp_letter(Letter::Y, c, degree));
      }
    }
  }
  return out;
}

// Draws a nonzero integer in [-3, 3] from the raw engine via rejection
// sampling (std::uniform_int_distribution is implementation-defined, and
// reproducible streams across platforms matter here).
inline long small_nonzero_exponent(std::mt19937_64& rng) {
  for (;;) {
    long v = static_cast<long>(rng() & 7u) - 3;  // [-3, 4]
    if (v != 0 && v <= 3) return v;
  }
}

// Deterministic group-like series: `factors` alternating exponential
// factors with small nonzero seeded exponents, degree-1 coefficients then
// adjusted to the constraints (std::nullopt = leave free).
template <class R>
NCSeries<R> random_group_like(std::uint64_t seed, int degree, const std::optional<R>& constraint_x,
                              const std::optional<R>& constraint_y, int factors = 4) {
  if (factors < 1) throw index_error("random_group_like: factors must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<GroupFactor<R>> fs;
  fs.reserve(static_cast<std::size_t>(factors));
  for (int i = 0; i < factors; ++i) {
    Letter l = (i % 2 == 0) ? Letter::X : Letter::Y;
    fs.push_back({l, scalar_ops<R>::from_long(small_nonzero_exponent(rng))});
  }
  return group_like_from_factors(fs, constraint_x, constraint_y, degree);
}

}  // namespace dualref
