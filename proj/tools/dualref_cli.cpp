// Batch front end: builders and identity checks with reproducible seeds and
// decimal-string JSON/CSV output.  Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or configuration error.

#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dualref/errors.hpp"
#include "dualref/formal.hpp"
#include "dualref/io.hpp"
#include "dualref/kz.hpp"
#include "dualref/mzv.hpp"
#include "dualref/padic.hpp"
#include "dualref/polylog.hpp"
#include "dualref/series.hpp"
#include "dualref/word.hpp"
#include "dualref/zeta.hpp"

namespace {

using namespace dualref;

// Pinned check tolerances (decimal strings so records echo them verbatim).
constexpr const char* kTolComplex = "1e-10";
constexpr const char* kOracleTargetComplex = "1e-12";
constexpr const char* kTolConstancy = "1e-25";
constexpr const char* kTolChainSmall = "1e-8";   // degree <= 3
constexpr const char* kTolChainLarge = "1e-5";   // degree >= 4
constexpr const char* kTolDuality = "1e-10";
constexpr const char* kOracleTargetDuality = "1e-12";

const char* chain_tol(int degree) { return degree <= 3 ? kTolChainSmall : kTolChainLarge; }

struct Output {
  std::vector<std::string> lines;
  bool all_pass = true;

  void emit(const Json& j) { lines.push_back(j.dump()); }
  void note(const Json& j, bool pass) {
    emit(j);
    all_pass = all_pass && pass;
  }

  int flush(const std::string& out_path) const {
    if (out_path.empty()) {
      for (const auto& l : lines) std::cout << l << '\n';
    } else {
      std::ofstream os(out_path, std::ios::binary);
      if (!os) throw domain_error("cannot open output file: " + out_path);
      for (const auto& l : lines) os << l << '\n';
    }
    return all_pass ? 0 : 1;
  }
};

// Runs body(i) for i in [0, count) on a small worker pool; used by the grid
// sweeps.  Each body writes only its own result slot, so emission order stays
// the parameter order.  The first exception (by index) is rethrown.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::exception_ptr> errors(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Real parse_real(const std::string& text, unsigned bits) {
  PrecisionGuard guard(bits);
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw domain_error("not a decimal number: " + text);
  }
}

Real parse_unit_z(const std::string& text, unsigned bits) {
  Real z = parse_real(text, bits);
  if (!(z > 0 && z < 1)) throw domain_error("z must lie in (0,1), got " + text);
  return z;
}

std::string rational_str(const Rational& q) { return rational_to_string(q); }

// ---------------------------------------------------------------------------
// Builders

void run_shuffle(Output& out, const std::string& left, const std::string& right) {
  Word a = Word::from_string(left);
  Word b = Word::from_string(right);
  const WordSum& s = shuffle(a, b);
  Json terms = Json::array();
  for (const auto& [w, c] : s) {
    Json t;
    t["word"] = w.str();
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  Json j;
  j["op"] = "shuffle";
  j["left"] = a.str();
  j["right"] = b.str();
  j["terms"] = std::move(terms);
  out.emit(j);
}

void run_dual(Output& out, const std::string& index) {
  MultiIndex k = MultiIndex::from_string(index);
  MultiIndex d = dual_index(k);
  Json j;
  j["op"] = "dual";
  j["index"] = k.str();
  j["dual"] = d.str();
  out.emit(j);
}

void run_mpl(Output& out, const std::string& index, const std::string& z_text, unsigned bits) {
  MultiIndex k = MultiIndex::from_string(index);
  Real z = parse_unit_z(z_text, bits);
  BoundedReal v = mpl_series(k, z, bits);
  Json j;
  j["op"] = "mpl";
  j["index"] = k.str();
  j["z"] = z_text;
  j["bits"] = bits;
  j["value"] = format_real(v.value, digits10_for_bits(bits));
  j["error_bound"] = format_real(v.bound, 3);
  out.emit(j);
}

void run_mzv(Output& out, const std::string& index, const std::string& target_text,
             unsigned bits) {
  MultiIndex k = MultiIndex::from_string(index);
  Real target = parse_real(target_text, 128);
  BoundedReal v = mzv_oracle(k, target);
  Json j;
  j["op"] = "mzv";
  j["index"] = k.str();
  j["target"] = target_text;
  j["value"] = format_real(v.value, digits10_for_bits(bits));
  j["error_bound"] = format_real(v.bound, 3);
  out.emit(j);
}

void run_phi(Output& out, int degree, unsigned bits, const std::string& format) {
  // Margin below the group-like tolerance 2^{-bits/2}; the oracle certifies
  // ~1e-51 per coefficient at the default budget, so the default bits=256
  // is honest while much larger requests fail loudly.
  Real target = real_pow2(-static_cast<long>(bits) / 2 - 5);
  NCSeries<BoundedReal> phi = build_Phi(degree, target);
  unsigned digits = digits10_for_bits(bits);
  if (format == "csv") {
    std::ostringstream os;
    write_series_csv(os, phi, digits);
    std::string table = os.str();
    // flush() adds one trailing newline per stored line
    if (!table.empty() && table.back() == '\n') table.pop_back();
    out.lines.push_back(std::move(table));
  } else {
    Json j;
    j["op"] = "phi";
    j["series"] = series_to_json(phi, digits);
    out.emit(j);
  }
}

void run_g0(Output& out, const std::string& z_text, int degree, unsigned bits,
            const std::string& format) {
  Real z = parse_unit_z(z_text, bits);
  NCSeries<BoundedReal> g0 = build_G0(z, degree, bits);
  unsigned digits = digits10_for_bits(bits);
  if (format == "csv") {
    std::ostringstream os;
    write_series_csv(os, g0, digits);
    std::string table = os.str();
    if (!table.empty() && table.back() == '\n') table.pop_back();
    out.lines.push_back(std::move(table));
  } else {
    Json j;
    j["op"] = "g0";
    j["z"] = z_text;
    j["series"] = series_to_json(g0, digits);
    out.emit(j);
  }
}

// ---------------------------------------------------------------------------
// Checks

Json complex_record(int n, int m, const std::string& z_text, unsigned bits) {
  Real z = parse_unit_z(z_text, bits);
  Real oracle_target = parse_real(kOracleTargetComplex, 128);
  Main1Record rec = verify_main1_numeric(n, m, z, bits, oracle_target);
  Real tol = parse_real(kTolComplex, 64);
  bool pass = rec.residual < tol;
  unsigned digits = digits10_for_bits(bits);
  Json j;
  j["check"] = "complex";
  j["n"] = n;
  j["m"] = m;
  j["z"] = z_text;
  j["lhs_first_sum"] = bounded_json(rec.lhs_first_sum, digits);
  j["lhs_second_sum"] = bounded_json(rec.lhs_second_sum, digits);
  j["lhs_total"] = bounded_json(rec.lhs_total, digits);
  j["rhs"] = bounded_json(rec.rhs, digits);
  j["residual"] = format_real(rec.residual, 3);
  j["tolerance"] = kTolComplex;
  j["pass"] = pass;
  return j;
}

int run_check_complex(Output& out, bool grid, int n, int m, const std::string& z_text,
                      unsigned bits, bool force_n2) {
  std::vector<std::tuple<int, int, std::string>> tasks;
  if (grid) {
    std::vector<std::pair<int, int>> pairs;
    if (force_n2) {
      pairs = {{2, 2}, {2, 3}, {2, 4}, {2, 5}};
    } else {
      pairs = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
    }
    for (auto [pn, pm] : pairs) {
      for (const char* zt : {"0.3", "0.5", "0.7"}) tasks.emplace_back(pn, pm, zt);
    }
  } else {
    tasks.emplace_back(force_n2 ? 2 : n, m, z_text);
  }
  std::vector<Json> records(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    auto& [tn, tm, tz] = tasks[i];
    records[i] = complex_record(tn, tm, tz, bits);
  });
  for (auto& r : records) out.note(r, r.at("pass").get<bool>());
  return 0;
}

Json constancy_record(int n, int m, const std::vector<std::string>& z_texts, unsigned bits) {
  std::vector<Real> zs;
  zs.reserve(z_texts.size());
  for (const auto& t : z_texts) zs.push_back(parse_unit_z(t, bits));
  ConstancyRecord rec = verify_main1_constancy(n, m, zs, bits);
  Real tol = parse_real(kTolConstancy, 64);
  bool pass = rec.max_variation < tol;
  unsigned digits = digits10_for_bits(bits);
  Json j;
  j["check"] = "constancy";
  j["n"] = n;
  j["m"] = m;
  j["z_values"] = z_texts;
  Json vals = Json::array();
  for (const auto& v : rec.totals) vals.push_back(bounded_json(v, digits));
  j["lhs_values"] = std::move(vals);
  j["max_variation"] = format_real(rec.max_variation, 3);
  j["tolerance"] = kTolConstancy;
  j["pass"] = pass;
  return j;
}

int run_check_constancy(Output& out, bool grid, int n, int m,
                        const std::vector<std::string>& z_texts, unsigned bits) {
  std::vector<std::string> zgrid = z_texts;
  if (zgrid.empty()) zgrid = {"0.2", "0.35", "0.5", "0.65", "0.8"};
  std::vector<std::pair<int, int>> pairs;
  if (grid) {
    for (int pn = 2; pn <= 5; ++pn) {
      for (int pm = 2; pm <= 5; ++pm) pairs.emplace_back(pn, pm);
    }
  } else {
    pairs.emplace_back(n, m);
  }
  std::vector<Json> records(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    records[i] = constancy_record(pairs[i].first, pairs[i].second, zgrid, bits);
  });
  for (auto& r : records) out.note(r, r.at("pass").get<bool>());
  return 0;
}

Json chain_record(const std::string& z_text, int degree, unsigned bits) {
  Real z = parse_unit_z(z_text, bits);
  Real phi_target = parse_real("1e-30", 128);
  ChainRuleRecord rec = verify_chain_rule_numeric(z, degree, bits, phi_target);
  Real tol = parse_real(chain_tol(degree), 64);
  bool pass = rec.max_residual < tol;
  Json j;
  j["check"] = "chain-rule";
  j["z"] = z_text;
  j["degree"] = degree;
  j["max_residual"] = format_real(rec.max_residual, 3);
  j["worst_word"] = rec.worst_word.str();
  j["tolerance"] = chain_tol(degree);
  j["pass"] = pass;
  return j;
}

int run_check_chain(Output& out, bool grid, const std::string& z_text, int degree,
                    unsigned bits) {
  std::vector<std::pair<std::string, int>> tasks;
  if (grid) {
    for (int d : {3, 4}) {
      for (const char* zt : {"0.3", "0.5"}) tasks.emplace_back(zt, d);
    }
  } else {
    tasks.emplace_back(z_text, degree);
  }
  std::vector<Json> records(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    records[i] = chain_record(tasks[i].first, tasks[i].second, bits);
  });
  for (auto& r : records) out.note(r, r.at("pass").get<bool>());
  return 0;
}

Json duality_record(int n, int m, unsigned bits) {
  Real oracle_target = parse_real(kOracleTargetDuality, 128);
  DualityRecord rec = verify_duality_numeric(n, m, oracle_target);
  Real tol = parse_real(kTolDuality, 64);
  bool pass = rec.residual < tol;
  unsigned digits = digits10_for_bits(bits);
  Json j;
  j["check"] = "duality";
  j["n"] = n;
  j["m"] = m;
  j["lhs_index"] = rec.lhs_index.str();
  j["rhs_index"] = rec.rhs_index.str();
  j["lhs"] = bounded_json(rec.lhs, digits);
  j["rhs"] = bounded_json(rec.rhs, digits);
  j["residual"] = format_real(rec.residual, 3);
  j["tolerance"] = kTolDuality;
  j["pass"] = pass;
  return j;
}

int run_check_duality(Output& out, bool grid, int n, int m, unsigned bits) {
  std::vector<std::pair<int, int>> pairs;
  if (grid) {
    pairs = {{2, 3}, {2, 4}, {2, 5}, {3, 3}};
  } else {
    pairs.emplace_back(n, m);
  }
  std::vector<Json> records(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    records[i] = duality_record(pairs[i].first, pairs[i].second, bits);
  });
  for (auto& r : records) out.note(r, r.at("pass").get<bool>());
  return 0;
}

Json formal_record(int n, int m, int degree, std::uint64_t seed) {
  Rational residual = formal_theorem_check(n, m, degree, seed);
  Json j;
  j["check"] = "formal";
  j["n"] = n;
  j["m"] = m;
  j["degree"] = degree;
  j["seed"] = seed;
  j["residual"] = rational_str(residual);
  j["pass"] = (residual == 0);
  return j;
}

int run_check_formal(Output& out, bool grid, int n, int m, int degree, std::uint64_t seed) {
  if (grid) {
    std::vector<std::pair<int, int>> pairs;
    for (int pn = 2; pn <= 5; ++pn) {
      for (int pm = 2; pm <= 5; ++pm) pairs.emplace_back(pn, pm);
    }
    std::vector<std::vector<Json>> records(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i) {
      auto [pn, pm] = pairs[i];
      int d = pn + pm - 2;
      for (std::uint64_t s = seed; s < seed + 100; ++s) {
        records[i].push_back(formal_record(pn, pm, d, s));
      }
    });
    for (auto& batch : records) {
      for (auto& r : batch) out.note(r, r.at("pass").get<bool>());
    }
  } else {
    int d = degree > 0 ? degree : n + m - 2;
    Json r = formal_record(n, m, d, seed);
    out.note(r, r.at("pass").get<bool>());
  }
  return 0;
}

Json ladic_record(const PadicContext& ctx, int n, int m, int degree, std::uint64_t seed) {
  LadicReport rep = formal_ladic_check(ctx, n, m, degree, seed);
  Json j;
  j["check"] = "ladic";
  j["prime"] = rep.prime;
  j["precision"] = rep.precision;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["degree"] = rep.degree;
  j["seed"] = rep.seed;
  j["residual"] = rational_str(rep.residual);
  j["residual_mod"] = rep.residual_mod.get_str();
  j["rho_z_mod"] = rep.rho_z_mod.get_str();
  j["rho_1mz_mod"] = rep.rho_1mz_mod.get_str();
  j["pass"] = rep.pass;
  return j;
}

int run_check_ladic(Output& out, bool grid, unsigned long prime, int n, int m, int degree,
                    std::uint64_t seed) {
  constexpr int kPrecision = 30;
  if (grid) {
    std::vector<std::pair<unsigned long, std::pair<int, int>>> tasks;
    for (unsigned long l : {2ul, 3ul, 5ul}) {
      for (int pn = 2; pn <= 5; ++pn) {
        for (int pm = 2; pm <= 5; ++pm) tasks.push_back({l, {pn, pm}});
      }
    }
    std::vector<std::vector<Json>> records(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
      auto [l, pair] = tasks[i];
      auto [pn, pm] = pair;
      int d = pn + pm - 2;
      PadicContext ctx = PadicContext::make(l, kPrecision, d);
      for (std::uint64_t s = seed; s < seed + 20; ++s) {
        records[i].push_back(ladic_record(ctx, pn, pm, d, s));
      }
    });
    for (auto& batch : records) {
      for (auto& r : batch) out.note(r, r.at("pass").get<bool>());
    }
  } else {
    int d = degree > 0 ? degree : n + m - 2;
    PadicContext ctx = PadicContext::make(prime, kPrecision, d);
    Json r = ladic_record(ctx, n, m, d, seed);
    out.note(r, r.at("pass").get<bool>());
  }
  return 0;
}

Json shuffle_lemma_record(int m, int n) {
  bool ok = shuffle_lemma_check(m, n);
  Json j;
  j["check"] = "shuffle-lemma";
  j["m"] = m;
  j["n"] = n;
  j["pass"] = ok;
  return j;
}

int run_check_shuffle_lemma(Output& out, bool grid, int m, int n) {
  std::vector<std::pair<int, int>> pairs;
  if (grid) {
    for (int pm = 2; pm <= 8; ++pm) {
      for (int pn = 2; pn <= 8; ++pn) pairs.emplace_back(pm, pn);
    }
  } else {
    pairs.emplace_back(m, n);
  }
  for (auto [pm, pn] : pairs) {
    Json r = shuffle_lemma_record(pm, pn);
    out.note(r, r.at("pass").get<bool>());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dualref: dual-route checks for the polylogarithm reflection identity"};
  app.require_subcommand(1);
  app.set_config("--config", "", "optional key=value config file (lower precedence than flags)");

  // Shared parameters and their defaults.  Table and chain-rule degrees get
  // their own variables so per-command defaults cannot leak across commands.
  int n = 2, m = 2, degree = 0;
  int table_degree = 5, chain_degree = 4;
  unsigned bits = 256;
  unsigned long prime = 3;
  std::uint64_t seed = 1;
  std::string z_text = "0.5";
  std::string index_text = "2";
  std::string target_text = "1e-12";
  std::string out_path;
  std::string format = "json";
  bool grid = false;
  std::string shuffle_left, shuffle_right;
  std::vector<std::string> z_list;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write records to this file instead of stdout");
  };
  auto add_grid = [&](CLI::App* sub) { sub->add_flag("--grid", grid, "run the standard sweep"); };

  CLI::App* c_shuffle = app.add_subcommand("shuffle", "shuffle product of two words");
  c_shuffle->add_option("left", shuffle_left, "first word, e.g. xy (e = empty)")->required();
  c_shuffle->add_option("right", shuffle_right, "second word")->required();
  add_common(c_shuffle);

  CLI::App* c_dual = app.add_subcommand("dual", "dual of an admissible multi-index");
  c_dual->add_option("--index", index_text, "multi-index, e.g. 1,2")->required();
  add_common(c_dual);

  CLI::App* c_mpl = app.add_subcommand("mpl", "multiple polylogarithm value at z");
  c_mpl->add_option("--index", index_text, "multi-index")->required();
  c_mpl->add_option("--z", z_text, "evaluation point in (0,1)");
  c_mpl->add_option("--bits", bits, "target precision in bits");
  add_common(c_mpl);

  CLI::App* c_mzv = app.add_subcommand("mzv", "multiple zeta value from the oracle");
  c_mzv->add_option("--index", index_text, "admissible multi-index")->required();
  c_mzv->add_option("--target", target_text, "absolute error target");
  c_mzv->add_option("--bits", bits, "digits shown correspond to this precision");
  add_common(c_mzv);

  CLI::App* c_phi = app.add_subcommand("phi", "associator coefficient table");
  c_phi->add_option("--degree", table_degree, "truncation degree")->capture_default_str();
  c_phi->add_option("--bits", bits, "target precision in bits");
  c_phi->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(c_phi);

  CLI::App* c_g0 = app.add_subcommand("g0", "fundamental-solution coefficient table at z");
  c_g0->add_option("--z", z_text, "evaluation point in (0,1)");
  c_g0->add_option("--degree", table_degree, "truncation degree")->capture_default_str();
  c_g0->add_option("--bits", bits, "target precision in bits");
  c_g0->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(c_g0);

  CLI::App* c_complex = app.add_subcommand("check-complex", "reflection identity vs zeta oracle");
  c_complex->add_option("--n", n, "outer exponent n >= 2");
  c_complex->add_option("--m", m, "outer exponent m >= 2");
  c_complex->add_option("--z", z_text, "evaluation point in (0,1)");
  c_complex->add_option("--bits", bits, "working precision in bits");
  add_grid(c_complex);
  add_common(c_complex);

  CLI::App* c_const = app.add_subcommand("check-constancy", "z-independence of the left side");
  c_const->add_option("--n", n, "outer exponent n >= 2");
  c_const->add_option("--m", m, "outer exponent m >= 2");
  c_const->add_option("--z", z_list, "z grid (repeatable)");
  c_const->add_option("--bits", bits, "working precision in bits");
  add_grid(c_const);
  add_common(c_const);

  CLI::App* c_chain = app.add_subcommand("check-chain-rule", "path-composition identity");
  c_chain->add_option("--z", z_text, "evaluation point in (0,1)");
  c_chain->add_option("--degree", chain_degree, "truncation degree")->capture_default_str();
  c_chain->add_option("--bits", bits, "working precision in bits");
  add_grid(c_chain);
  add_common(c_chain);

  CLI::App* c_duality = app.add_subcommand("check-duality", "height-one duality via the oracle");
  c_duality->add_option("--n", n, "n >= 2");
  c_duality->add_option("--m", m, "m >= 2");
  c_duality->add_option("--bits", bits, "digits shown correspond to this precision");
  add_grid(c_duality);
  add_common(c_duality);

  CLI::App* c_oi = app.add_subcommand("check-oi-ueno", "the n = 2 special case of check-complex");
  c_oi->add_option("--m", m, "outer exponent m >= 2");
  c_oi->add_option("--z", z_text, "evaluation point in (0,1)");
  c_oi->add_option("--bits", bits, "working precision in bits");
  add_grid(c_oi);
  add_common(c_oi);

  CLI::App* c_formal = app.add_subcommand("check-formal", "formal theorem schema, exact rationals");
  c_formal->add_option("--n", n, "n >= 2");
  c_formal->add_option("--m", m, "m >= 2");
  c_formal->add_option("--degree", degree, "truncation degree (default n+m-2)");
  c_formal->add_option("--seed", seed, "base seed");
  add_grid(c_formal);
  add_common(c_formal);

  CLI::App* c_ladic = app.add_subcommand("check-ladic", "l-adic theorem schema with residues");
  c_ladic->add_option("--prime", prime, "prime l");
  c_ladic->add_option("--n", n, "n >= 2");
  c_ladic->add_option("--m", m, "m >= 2");
  c_ladic->add_option("--degree", degree, "truncation degree (default n+m-2)");
  c_ladic->add_option("--seed", seed, "base seed");
  add_grid(c_ladic);
  add_common(c_ladic);

  CLI::App* c_lemma = app.add_subcommand("check-shuffle-lemma", "telescoped shuffle-sum lemma");
  c_lemma->add_option("--m", m, "m >= 2");
  c_lemma->add_option("--n", n, "n >= 2");
  add_grid(c_lemma);
  add_common(c_lemma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  try {
    if (*c_shuffle) run_shuffle(out, shuffle_left, shuffle_right);
    if (*c_dual) run_dual(out, index_text);
    if (*c_mpl) run_mpl(out, index_text, z_text, bits);
    if (*c_mzv) run_mzv(out, index_text, target_text, bits);
    if (*c_phi) run_phi(out, table_degree, bits, format);
    if (*c_g0) run_g0(out, z_text, table_degree, bits, format);
    if (*c_complex) run_check_complex(out, grid, n, m, z_text, bits, /*force_n2=*/false);
    if (*c_oi) run_check_complex(out, grid, 2, m, z_text, bits, /*force_n2=*/true);
    if (*c_const) run_check_constancy(out, grid, n, m, z_list, bits);
    if (*c_chain) run_check_chain(out, grid, z_text, chain_degree, bits);
    if (*c_duality) run_check_duality(out, grid, n, m, bits);
    if (*c_formal) run_check_formal(out, grid, n, m, degree, seed);
    if (*c_ladic) run_check_ladic(out, grid, prime, n, m, degree, seed);
    if (*c_lemma) run_check_shuffle_lemma(out, grid, m, n);
    return out.flush(out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
