#include "dualref/mzv.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "dualref/zeta.hpp"

namespace dualref {

namespace {

// ---------------------------------------------------------------------------
// Asymptotic tails.
//
// For a suffix (k_{i+1}, ..., k_d) of an admissible index, the restricted
// tail Z_{>r} = sum over r < n_{i+1} < ... < n_d of prod n_j^{-k_j}
// satisfies Z_{>r}(suffix) = sum_{n>r} n^{-k_{i+1}} Z_{>n}(shorter suffix).
// Because every variable exceeds r, these tails are pure power series in
// 1/r (no logarithms can arise: each Euler-Maclaurin integral lands on an
// exponent >= 2).  An Expansion holds such a series plus a matching series
// of nonnegative coefficients bounding the approximation error pointwise
// for every argument >= N.
// ---------------------------------------------------------------------------

struct Expansion {
  std::vector<Real> a;    // value coefficients; index = power of 1/r
  std::vector<Real> err;  // nonnegative error-bound coefficients
};

struct TailParams {
  long N;
  int J;        // Euler-Maclaurin pairs
  int cmax;     // value-expansion truncation
  int cerrmax;  // error-expansion truncation (roomier)
  unsigned work;
};

// Adds |v| * 2^levels_remaining * N^{-power} to the final-error sink: a
// coefficient discarded at `power` can only move to equal-or-higher powers
// under further tail sums (each exponent shift is k - 1 >= 0) while its
// magnitude at r = N grows by at most a factor 2 per level.
void drop(Real& sink, const Real& v, int power, int levels_remaining, long N) {
  sink += abs(v) * real_pow2(levels_remaining) * pow(Real(N), -power);
}

// sum_{n > r} n^{-k} E(n) as a new Expansion, valid for r >= N.
Expansion tail_sum(const Expansion& in, int k, int levels_remaining, const TailParams& p,
                   Real& sink) {
  Expansion out;
  out.a.assign(static_cast<std::size_t>(p.cmax) + 1, Real(0));
  out.err.assign(static_cast<std::size_t>(p.cerrmax) + 1, Real(0));

  auto put_value = [&](int power, const Real& v) {
    if (power <= p.cmax) {
      out.a[static_cast<std::size_t>(power)] += v;
    } else {
      drop(sink, v, power, levels_remaining, p.N);
    }
  };
  auto put_err = [&](int power, const Real& v) {
    if (power <= p.cerrmax) {
      out.err[static_cast<std::size_t>(power)] += v;
    } else {
      drop(sink, v, power, levels_remaining, p.N);
    }
  };

  for (int c = 0; c < static_cast<int>(in.a.size()); ++c) {
    const Real& a = in.a[static_cast<std::size_t>(c)];
    if (a == 0) continue;
    const int c2 = c + k;
    if (c2 < 2) throw precision_error("tail_sum: divergent exponent");  // unreachable: k_d >= 2
    // Euler-Maclaurin for f(t) = t^{-c2}, summed over n > r:
    //   integral r^{1-c2}/(c2-1), then -f(r)/2, then the B_{2j} corrections
    //   +B_{2j}/(2j)! (c2)_{2j-1} r^{-(c2+2j-1)}, remainder bounded by
    //   |B_{2J}|/(2J)! (c2)_{2J} / (c2+2J-1) * r^{-(c2+2J-1)}.
    put_value(c2 - 1, a / (c2 - 1));
    put_value(c2, -a / 2);
    Real rising(1);
    int arg = c2;
    for (int j = 1; j <= p.J; ++j) {
      rising *= arg++;
      if (j > 1) rising *= arg++;  // (c2)_{2j-1}
      Real fac;
      mpfr_fac_ui(fac.backend().data(), 2 * static_cast<unsigned>(j), MPFR_RNDN);
      put_value(c2 + 2 * j - 1, a * real_from_rational(bernoulli(2 * static_cast<unsigned>(j))) /
                                    fac * rising);
    }
    Real rising2J = rising * arg;  // (c2)_{2J}
    Real fac2J;
    mpfr_fac_ui(fac2J.backend().data(), 2 * static_cast<unsigned>(p.J), MPFR_RNDN);
    Real rem = abs(a) * abs(real_from_rational(bernoulli(2 * static_cast<unsigned>(p.J)))) /
               fac2J * rising2J / (c2 + 2 * p.J - 1);
    put_err(c2 + 2 * p.J - 1, rem);
  }

  // Error terms pass through the crude enveloping bound
  //   sum_{n>r} n^{-(k+ce)} <= 2/(k+ce-1) r^{-(k+ce-1)}   (for r >= k+ce).
  for (int ce = 0; ce < static_cast<int>(in.err.size()); ++ce) {
    const Real& e = in.err[static_cast<std::size_t>(ce)];
    if (e == 0) continue;
    const int c2 = ce + k;
    put_err(c2 - 1, e * 2 / (c2 - 1));
  }
  return out;
}

// Horner evaluation at r = N; returns value, abs-coefficient value, and
// error-series value.
struct EvalResult {
  Real value;
  Real abs_value;
  Real err;
};

EvalResult eval_expansion(const Expansion& ex, long N, unsigned work) {
  Real x = Real(1) / Real(N);
  Real v(0), av(0), ev(0);
  for (int c = static_cast<int>(ex.a.size()) - 1; c >= 0; --c) {
    v = v * x + ex.a[static_cast<std::size_t>(c)];
    av = av * x + abs(ex.a[static_cast<std::size_t>(c)]);
  }
  for (int c = static_cast<int>(ex.err.size()) - 1; c >= 0; --c) {
    ev = ev * x + ex.err[static_cast<std::size_t>(c)];
  }
  EvalResult r;
  r.value = v;
  r.abs_value = av;
  // Coefficient arithmetic and the Horner pass contribute relative-level
  // rounding on the order of (terms per coefficient) ulps.
  r.err = ev + av * real_pow2(-static_cast<long>(work) + 10);
  return r;
}

// ---------------------------------------------------------------------------
// Partial sums below N: one pass over n = 1..N updating a prefix trie.
// Node values are S_prefix(n) = sum over 0 < n_1 < ... < n_i <= n of
// prod n_j^{-k_j}; updating longer prefixes first keeps the parent value at
// step n-1 exactly when it is needed.
// ---------------------------------------------------------------------------

struct TrieNode {
  std::vector<int> prefix;
  int parent = -1;  // -1: the empty prefix (value 1)
  int exp = 0;      // exponent of this node's last variable
  Real value = Real(0);
};

std::vector<TrieNode> build_trie(const std::vector<MultiIndex>& ks) {
  std::map<std::vector<int>, int> id;
  std::vector<TrieNode> nodes;
  for (const auto& k : ks) {
    std::vector<int> pfx;
    int parent = -1;
    for (int part : k.parts) {
      pfx.push_back(part);
      auto it = id.find(pfx);
      if (it == id.end()) {
        TrieNode node;
        node.prefix = pfx;
        node.parent = parent;
        node.exp = part;
        it = id.emplace(pfx, static_cast<int>(nodes.size())).first;
        nodes.push_back(std::move(node));
      }
      parent = it->second;
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](const TrieNode& a, const TrieNode& b) {
    return a.prefix.size() > b.prefix.size();
  });
  // re-link parents after sorting
  std::map<std::vector<int>, int> pos;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) pos[nodes[i].prefix] = i;
  for (auto& node : nodes) {
    if (node.prefix.size() == 1) {
      node.parent = -1;
    } else {
      std::vector<int> pp(node.prefix.begin(), node.prefix.end() - 1);
      node.parent = pos.at(pp);
    }
  }
  return nodes;
}

std::string index_key(const MultiIndex& k) { return k.str(); }

struct CacheEntry {
  BoundedReal value;
};

std::mutex cache_mu;
std::map<std::string, CacheEntry>& cache() {
  static std::map<std::string, CacheEntry> c;
  return c;
}

}  // namespace

std::vector<BoundedReal> mzv_oracle_batch(const std::vector<MultiIndex>& ks, const Real& target,
                                          const MzvBudget& budget) {
  for (const auto& k : ks) {
    if (!k.admissible()) {
      throw domain_error("mzv_oracle: index (" + k.str() + ") is not admissible");
    }
    if (k.weight() > 8) throw domain_error("mzv_oracle: weight > 8 unsupported");
  }
  if (!(target > 0)) throw domain_error("mzv_oracle: target must be positive");
  if (budget.outer_terms < 100) throw domain_error("mzv_oracle: outer_terms too small");

  // Working precision from the requested target.
  long texp = mpfr_get_exp(target.backend().data());  // target in [2^{e-1}, 2^e)
  unsigned tbits = texp >= 0 ? 1u : static_cast<unsigned>(1 - texp);
  const unsigned work = std::max(192u, tbits + 64);
  PrecisionGuard guard(work);

  const long N = budget.outer_terms;
  TailParams params{N, budget.em_terms, budget.max_power, budget.max_power + 2 * budget.em_terms + 10,
                    work};

  // Shared partial-sum pass.
  std::vector<TrieNode> nodes = build_trie(ks);
  int max_exp = 2;
  for (const auto& nd : nodes) max_exp = std::max(max_exp, nd.exp);
  std::vector<Real> invpow(static_cast<std::size_t>(max_exp) + 1, Real(0));
  for (long n = 1; n <= N; ++n) {
    Real inv = Real(1) / Real(n);
    invpow[1] = inv;
    for (int j = 2; j <= max_exp; ++j) invpow[static_cast<std::size_t>(j)] = invpow[static_cast<std::size_t>(j - 1)] * inv;
    for (auto& nd : nodes) {
      if (nd.parent < 0) {
        nd.value += invpow[static_cast<std::size_t>(nd.exp)];
      } else {
        const Real& pv = nodes[static_cast<std::size_t>(nd.parent)].value;
        if (pv == 0) continue;
        nd.value += invpow[static_cast<std::size_t>(nd.exp)] * pv;
      }
    }
  }
  std::map<std::vector<int>, int> pos;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) pos[nodes[i].prefix] = i;
  // Positive-term DP rounding: a few ulps per step, relative.
  Real prel = Real(N) * real_pow2(-static_cast<long>(work) + 4);

  std::vector<BoundedReal> out;
  out.reserve(ks.size());
  for (const auto& k : ks) {
    const int d = k.depth();
    Real sink(0);

    // Tail expansions for every suffix, innermost exponent last: tails[i]
    // approximates Z_{>r}(k_{i+1..d}); tails[d] is the constant 1.
    std::vector<EvalResult> tails(static_cast<std::size_t>(d) + 1);
    Expansion ex;
    ex.a.assign(static_cast<std::size_t>(params.cmax) + 1, Real(0));
    ex.a[0] = 1;
    tails[static_cast<std::size_t>(d)] = EvalResult{Real(1), Real(1), Real(0)};
    for (int i = d; i >= 1; --i) {
      ex = tail_sum(ex, k.parts[static_cast<std::size_t>(i - 1)], i - 1, params, sink);
      tails[static_cast<std::size_t>(i - 1)] = eval_expansion(ex, N, work);
    }

    // zeta(k) = sum_i P_i * Z_{>N}(k_{i+1..d}): each tuple splits uniquely
    // at its last variable <= N.
    BoundedReal total;
    Real p_sum(0);
    for (int i = 0; i <= d; ++i) {
      BoundedReal p;
      if (i == 0) {
        p = BoundedReal(1);
      } else {
        std::vector<int> pfx(k.parts.begin(), k.parts.begin() + i);
        const Real& pv = nodes[static_cast<std::size_t>(pos.at(pfx))].value;
        p = BoundedReal(pv, pv * prel);
      }
      p_sum += p.value;
      const EvalResult& t = tails[static_cast<std::size_t>(i)];
      total += p * BoundedReal(t.value, t.err);
    }
    total.bound += sink * (p_sum + 1);

    if (!(total.bound <= target)) {
      throw precision_error("mzv_oracle: certified bound misses target for (" + k.str() + ")");
    }
    out.push_back(total);
  }
  return out;
}

BoundedReal mzv_oracle(const MultiIndex& k, const Real& target, const MzvBudget& budget) {
  return mzv_oracle_batch({k}, target, budget).front();
}

BoundedReal mzv_cached(const MultiIndex& k, const Real& target, const MzvBudget& budget) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache().find(index_key(k));
    if (it != cache().end() && it->second.value.bound <= target) return it->second.value;
  }
  BoundedReal v = mzv_oracle(k, target, budget);
  std::lock_guard<std::mutex> lock(cache_mu);
  auto [it, inserted] = cache().emplace(index_key(k), CacheEntry{v});
  if (!inserted && it->second.value.bound > v.bound) it->second.value = v;
  return v;
}

void mzv_warm_cache(int max_weight, const Real& target, const MzvBudget& budget) {
  // Admissible indices of weight w correspond to compositions with final
  // part >= 2; enumerate by weight.
  std::vector<MultiIndex> ks;
  for (int w = 2; w <= max_weight; ++w) {
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
      std::vector<int> cur = stack.back();
      stack.pop_back();
      int sum = 0;
      for (int v : cur) sum += v;
      if (sum == w) {
        if (cur.back() >= 2) ks.emplace_back(cur);
        continue;
      }
      for (int next = 1; next <= w - sum; ++next) {
        std::vector<int> ext = cur;
        ext.push_back(next);
        stack.push_back(ext);
      }
    }
  }
  std::sort(ks.begin(), ks.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.str() < b.str();
  });
  std::vector<BoundedReal> vals = mzv_oracle_batch(ks, target, budget);
  std::lock_guard<std::mutex> lock(cache_mu);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto [it, inserted] = cache().emplace(index_key(ks[i]), CacheEntry{vals[i]});
    if (!inserted && it->second.value.bound > vals[i].bound) it->second.value = vals[i];
  }
}

}  // namespace dualref
