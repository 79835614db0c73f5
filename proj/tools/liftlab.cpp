// liftlab: exact lifting analysis for numerical semigroups.
//
// Subcommands: analyze, lift, mingens, indisp, cm, cm-threshold, betti,
// strong, sweep.  All numeric output is exact; identical invocations print
// byte-identical stdout (--timing goes to stderr).  Exit codes: 0 success,
// 2 domain error, 3 scan bound too small, 4 parse error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "liftlab/betti.hpp"
#include "liftlab/cm.hpp"
#include "liftlab/errors.hpp"
#include "liftlab/json_io.hpp"
#include "liftlab/parallel.hpp"
#include "liftlab/semigroup.hpp"
#include "liftlab/tangent_cone.hpp"
#include "liftlab/toric.hpp"

namespace {

using namespace liftlab;

constexpr int kCacheVersion = 1;

struct Common {
  std::string gens_csv;
  bool as_json = false;
  int threads = 0;
  bool timing = false;
};

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseFailure(std::string("bad ") + what + " entry: '" + tok + "'");
    }
  }
  if (out.empty()) throw ParseFailure(std::string("empty ") + what + " list");
  return out;
}

std::pair<Int, Int> parse_k_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw ParseFailure("bad k range '" + text + "' (expected a..b)");
  try {
    std::size_t ua = 0, ub = 0;
    std::string lo = text.substr(0, pos), hi = text.substr(pos + 2);
    Int a = std::stoll(lo, &ua);
    Int b = std::stoll(hi, &ub);
    if (ua != lo.size() || ub != hi.size() || a < 1 || b < a)
      throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw ParseFailure("bad k range '" + text + "' (expected a..b with 1 <= a <= b)");
  }
}

std::string join(const std::vector<Int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

/// "(1,3,2)" with trailing zero entries trimmed (but "(1)" at minimum).
std::string vector_text(std::vector<Int> betti) {
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return "(" + join(betti, ",") + ")";
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// Subcommand bodies.

int cmd_analyze(const Common& c) {
  NumericalSemigroup S(parse_int_list(c.gens_csv, "generator"));
  Exec ex{c.threads};
  auto mg = minimal_generators(S, ex);
  auto ind = indispensable_binomials(S, ex);
  auto table = betti_table(S, ex);
  auto gr = koszul_betti(S, KoszulMode::TangentCone, {}, ex);
  auto rep = cm_report(S, ex);

  std::vector<Int> ring_vec{1};
  for (Int t : table.totals()) ring_vec.push_back(t);

  if (c.as_json) {
    json out{{"characteristic", 0}, {"semigroup", semigroup_json(S)}};
    json mj = json::array();
    for (const auto& b : mg) {
      json row = binomial_json(b);
      row["sdeg"] = S.s_degree(b.lhs);
      mj.push_back(row);
    }
    out["mingens"] = mj;
    json ij = json::array();
    for (const auto& b : ind) ij.push_back(binomial_json(b));
    out["indispensable"] = ij;
    out["betti"] = betti_json(table);
    out["bettiGr"] = bigraded_json(gr);
    out["cm"] = cm_json(rep);
    emit(out);
    return 0;
  }

  std::cout << "S = " << S.to_string() << "\n";
  std::cout << "apery (mod " << S.multiplicity() << "): " << join(S.apery(), ", ")
            << "\n";
  std::cout << "frobenius: " << S.frobenius() << "\n";
  std::cout << "mingens (" << mg.size() << "):\n";
  for (const auto& b : mg)
    std::cout << "  " << b.text() << " [" << S.s_degree(b.lhs) << "]\n";
  std::cout << "indispensable (" << ind.size() << "):\n";
  for (const auto& b : ind)
    std::cout << "  " << b.text() << " [" << S.s_degree(b.lhs) << "]\n";
  std::cout << "betti (ring): " << vector_text(ring_vec) << "\n";
  for (auto it = table.rows.begin(); it != table.rows.end(); ++it) {
    std::cout << (it == table.rows.begin() ? "betti degrees: " : "; ");
    std::cout << "i=" << it->first << ": " << join(table.degrees(it->first), ", ");
  }
  if (!table.rows.empty()) std::cout << "\n";
  std::cout << "betti (gr): " << vector_text(gr.betti) << "\n";
  std::cout << "CM: " << (rep.cm ? "yes" : "no") << ", k0: " << rep.k0 << "\n";
  for (const auto& w : rep.witnesses)
    std::cout << "witness: M = " << monomial_text(w.M) << " [" << S.s_degree(w.M)
              << "], best N = " << monomial_text(w.best_N) << ", deficit "
              << w.deficit << ", k >= " << w.k_threshold << "\n";
  return 0;
}

int cmd_lift(const Common& c, Int k) {
  NumericalSemigroup S(parse_int_list(c.gens_csv, "generator"));
  NumericalSemigroup Sk = lift(S, k);
  if (c.as_json) {
    json a = json::array();
    for (Int g : Sk.generators()) a.push_back(g);
    emit(json{{"characteristic", 0}, {"k", k}, {"gens", a}});
  } else {
    std::cout << join(Sk.generators(), ",") << "\n";
  }
  return 0;
}

int cmd_binomials(const Common& c, bool indispensable_only) {
  NumericalSemigroup S(parse_int_list(c.gens_csv, "generator"));
  Exec ex{c.threads};
  auto bs = indispensable_only ? indispensable_binomials(S, ex) : minimal_generators(S, ex);
  if (c.as_json) {
    json rows = json::array();
    for (const auto& b : bs) {
      json row = binomial_json(b);
      row["sdeg"] = S.s_degree(b.lhs);
      rows.push_back(row);
    }
    emit(json{{"characteristic", 0},
              {indispensable_only ? "indispensable" : "mingens", rows}});
  } else {
    for (const auto& b : bs)
      std::cout << b.text() << " [" << S.s_degree(b.lhs) << "]\n";
  }
  return 0;
}

int cmd_cm(const Common& c, bool verbose) {
  NumericalSemigroup S(parse_int_list(c.gens_csv, "generator"));
  auto rep = cm_report(S, Exec{c.threads});
  if (c.as_json) {
    json out = cm_json(rep);
    out["characteristic"] = 0;
    if (verbose) {
      json cands = json::array();
      for (const auto& w : rep.witnesses) {
        json per{{"M", factorization_json(w.M)}};
        json list = json::array();
        for (const auto& cand : cm_candidates(S, w.M))
          list.push_back(json{{"N", factorization_json(cand.N)},
                              {"kRequired", cand.k_required}});
        per["candidates"] = list;
        cands.push_back(per);
      }
      out["candidates"] = cands;
    }
    emit(out);
    return 0;
  }
  std::cout << "CM: " << (rep.cm ? "yes" : "no") << ", k0: " << rep.k0 << "\n";
  for (const auto& w : rep.witnesses) {
    std::cout << "witness: M = " << monomial_text(w.M) << " [" << S.s_degree(w.M)
              << "], best N = " << monomial_text(w.best_N) << ", deficit "
              << w.deficit << ", k >= " << w.k_threshold << "\n";
    if (verbose)
      for (const auto& cand : cm_candidates(S, w.M))
        std::cout << "  candidate N = " << monomial_text(cand.N) << " (k >= "
                  << cand.k_required << ")\n";
  }
  return 0;
}

int cmd_cm_threshold(const Common& c) {
  NumericalSemigroup S(parse_int_list(c.gens_csv, "generator"));
  Int k0 = cm_threshold(S, Exec{c.threads});
  // k0 counts every integer k >= k0; only k coprime to m_1 define liftings.
  std::vector<Int> valid;
  for (Int k = k0; static_cast<int>(valid.size()) < 6; ++k)
    if (std::gcd(k, S.multiplicity()) == 1) valid.push_back(k);
  if (c.as_json) {
    json v = json::array();
    for (Int k : valid) v.push_back(k);
    emit(json{{"characteristic", 0}, {"k0", k0}, {"validK", v}});
  } else {
    std::cout << "k0: " << k0 << "\n";
    std::cout << "valid k from k0: " << join(valid, ", ") << ", ...\n";
  }
  return 0;
}

int cmd_betti(const Common& c, bool tangent_cone, Int sdeg_bound) {
  NumericalSemigroup S(parse_int_list(c.gens_csv, "generator"));
  Exec ex{c.threads};
  if (tangent_cone) {
    auto res = koszul_betti(S, KoszulMode::TangentCone, KoszulBounds{sdeg_bound, 0}, ex);
    if (c.as_json) {
      json totals = json::array();
      for (Int b : res.betti) totals.push_back(b);
      emit(json{{"characteristic", 0},
                {"mode", "tangent-cone"},
                {"totals", totals},
                {"betti", bigraded_json(res)}});
    } else {
      std::cout << vector_text(res.betti) << "\n";
    }
    return 0;
  }
  if (sdeg_bound != 0 && sdeg_bound < betti_degree_bound(S))
    fail(Err::BoundTooSmall, "ring betti scan needs s-degrees up to " +
                                 std::to_string(betti_degree_bound(S)));
  auto table = betti_table(S, ex);
  std::vector<Int> vec{1};
  for (Int t : table.totals()) vec.push_back(t);
  if (c.as_json) {
    json totals = json::array();
    for (Int b : vec) totals.push_back(b);
    emit(json{{"characteristic", 0},
              {"mode", "ring"},
              {"totals", totals},
              {"betti", betti_json(table)}});
  } else {
    std::cout << vector_text(vec) << "\n";
  }
  return 0;
}

int cmd_strong(const Common& c) {
  NumericalSemigroup S(parse_int_list(c.gens_csv, "generator"));
  auto res = strongly_indispensable(S, Exec{c.threads});
  if (c.as_json) {
    json out = strong_json(res);
    out["characteristic"] = 0;
    emit(out);
    return 0;
  }
  if (res.value) {
    std::cout << "true\n";
  } else {
    const auto& v = *res.violation;
    std::cout << "false (i=" << v[0] << ": " << v[1] << "-" << v[2] << "="
              << v[1] - v[2] << " in S)\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Sweep with optional per-(gens, k) cache under $LIFTLAB_CACHE.

struct SweepRow {
  Int k = 1;
  bool valid = false;
  bool bound_too_small = false;
  bool cm = false;
  std::vector<Int> beta_gr;    // tangent cone, i = 1..n-1
  std::vector<Int> beta_ring;  // i = 1..n-1
};

json sweep_row_json(const std::vector<Int>& gens, const SweepRow& r) {
  json g = json::array();
  for (Int x : gens) g.push_back(x);
  json row{{"version", kCacheVersion}, {"gens", g}, {"k", r.k}, {"valid", r.valid}};
  row["boundTooSmall"] = r.bound_too_small;
  if (r.valid && !r.bound_too_small) {
    row["cm"] = r.cm;
    json bg = json::array(), br = json::array();
    for (Int b : r.beta_gr) bg.push_back(b);
    for (Int b : r.beta_ring) br.push_back(b);
    row["betaGr"] = bg;
    row["betaRing"] = br;
  }
  return row;
}

bool sweep_row_from_json(const json& j, const std::vector<Int>& gens, Int k, SweepRow& out) {
  try {
    if (j.at("version").get<int>() != kCacheVersion) return false;
    std::vector<Int> g = j.at("gens").get<std::vector<Int>>();
    if (g != gens || j.at("k").get<Int>() != k) return false;
    out.k = k;
    out.valid = j.at("valid").get<bool>();
    out.bound_too_small = j.at("boundTooSmall").get<bool>();
    if (out.valid && !out.bound_too_small) {
      out.cm = j.at("cm").get<bool>();
      out.beta_gr = j.at("betaGr").get<std::vector<Int>>();
      out.beta_ring = j.at("betaRing").get<std::vector<Int>>();
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

SweepRow compute_sweep_row(const NumericalSemigroup& S, Int k) {
  SweepRow row;
  row.k = k;
  row.valid = std::gcd(k, S.generators()[0]) == 1;
  if (!row.valid) return row;
  try {
    NumericalSemigroup Sk = lift(S, k);
    Exec serial{1};  // the sweep itself is the concurrent driver
    row.cm = is_tangent_cone_cm(Sk, serial);
    auto gr = koszul_betti(Sk, KoszulMode::TangentCone, {}, serial);
    for (int i = 1; i < S.ngens(); ++i)
      row.beta_gr.push_back(gr.betti[static_cast<std::size_t>(i)]);
    row.beta_ring = betti_table(Sk, serial).totals();
  } catch (const Error& e) {
    if (e.code() != Err::BoundTooSmall) throw;
    row.bound_too_small = true;
    row.beta_gr.clear();
    row.beta_ring.clear();
  }
  return row;
}

int cmd_sweep(const Common& c, const std::string& range, const std::string& out_file,
              const std::string& format) {
  NumericalSemigroup S(parse_int_list(c.gens_csv, "generator"));
  auto [klo, khi] = parse_k_range(range);
  if (format != "csv" && format != "json")
    throw ParseFailure("bad format '" + format + "' (expected csv or json)");

  const char* cache_env = std::getenv("LIFTLAB_CACHE");
  std::filesystem::path cache_dir;
  if (cache_env && *cache_env) {
    cache_dir = cache_env;
    std::filesystem::create_directories(cache_dir);
  }
  auto cache_path = [&](Int k) {
    return cache_dir / ("g" + join(S.generators(), "_") + "_k" + std::to_string(k) +
                        ".json");
  };

  std::vector<SweepRow> rows(static_cast<std::size_t>(khi - klo + 1));
  parallel_for(khi - klo + 1, Exec{c.threads}, [&](Int idx) {
    Int k = klo + idx;
    SweepRow row;
    bool from_cache = false;
    if (!cache_dir.empty()) {
      std::ifstream in(cache_path(k));
      if (in) {
        try {
          json j = json::parse(in);
          from_cache = sweep_row_from_json(j, S.generators(), k, row);
        } catch (const std::exception&) {
          from_cache = false;
        }
      }
    }
    if (!from_cache) {
      row = compute_sweep_row(S, k);
      if (!cache_dir.empty()) {
        auto final_path = cache_path(k);
        auto tmp_path = final_path;
        tmp_path += ".tmp" + std::to_string(static_cast<long long>(idx));
        std::ofstream out(tmp_path);
        out << sweep_row_json(S.generators(), row).dump() << "\n";
        out.close();
        std::filesystem::rename(tmp_path, final_path);
      }
    }
    rows[static_cast<std::size_t>(idx)] = row;
  });

  std::ostringstream body;
  int ncols = S.ngens() - 1;
  if (format == "csv") {
    body << "k,valid,cm";
    for (int i = 1; i <= ncols; ++i) body << ",beta_gr_" << i;
    for (int i = 1; i <= ncols; ++i) body << ",beta_ring_" << i;
    body << "\n";
    for (const auto& r : rows) {
      body << r.k << "," << (r.valid ? "true" : "false") << ",";
      if (!r.valid) {
        for (int i = 0; i < 2 * ncols; ++i) body << ",";
      } else if (r.bound_too_small) {
        body << "?";
        for (int i = 0; i < 2 * ncols; ++i) body << ",?";
      } else {
        body << (r.cm ? "true" : "false");
        for (Int b : r.beta_gr) body << "," << b;
        for (Int b : r.beta_ring) body << "," << b;
      }
      body << "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(sweep_row_json(S.generators(), r));
    json out{{"characteristic", 0}, {"gens", json::array()}, {"rows", arr}};
    for (Int g : S.generators()) out["gens"].push_back(g);
    body << out.dump() << "\n";
  }

  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot open output file " + out_file);
    f << body.str();
  } else {
    std::cout << body.str();
  }
  bool any_bts = false;
  for (const auto& r : rows) any_bts = any_bts || r.bound_too_small;
  return any_bts ? 3 : 0;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--gens", c.gens_csv, "comma-separated minimal generators")
      ->required();
  sub->add_flag("--json", c.as_json, "emit JSON instead of text");
  sub->add_option("--threads", c.threads, "worker threads (0 = all cores)");
  sub->add_flag("--timing", c.timing, "print wall time to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lifting analysis for numerical semigroups"};
  app.require_subcommand(1);

  Common c;
  Int lift_k = 0;
  bool cm_verbose = false;
  bool betti_tc = false;
  Int betti_bound = 0;
  std::string sweep_range, sweep_out, sweep_format = "csv";

  CLI::App* analyze = app.add_subcommand("analyze", "full report for one semigroup");
  add_common(analyze, c);
  CLI::App* lift_cmd = app.add_subcommand("lift", "generators of the k-lifting");
  add_common(lift_cmd, c);
  lift_cmd->add_option("-k,--k", lift_k, "lifting parameter")->required();
  CLI::App* mingens = app.add_subcommand("mingens", "minimal toric-ideal generators");
  add_common(mingens, c);
  CLI::App* indisp = app.add_subcommand("indisp", "indispensable binomials");
  add_common(indisp, c);
  CLI::App* cm = app.add_subcommand("cm", "tangent-cone Cohen-Macaulay report");
  add_common(cm, c);
  cm->add_flag("--verbose", cm_verbose, "list all companion candidates");
  CLI::App* cmth = app.add_subcommand("cm-threshold", "least k with CM tangent cone");
  add_common(cmth, c);
  CLI::App* betti = app.add_subcommand("betti", "betti numbers (ring or tangent cone)");
  add_common(betti, c);
  betti->add_flag("--tangent-cone", betti_tc, "associated graded ring instead of K[S]");
  betti->add_option("--sdeg-bound", betti_bound, "explicit S-degree scan bound");
  CLI::App* strong = app.add_subcommand("strong", "strong indispensability of the resolution");
  add_common(strong, c);
  CLI::App* sweep = app.add_subcommand("sweep", "per-k lifting table");
  add_common(sweep, c);
  sweep->add_option("--k", sweep_range, "k range a..b")->required();
  sweep->add_option("--out", sweep_out, "write to file instead of stdout");
  sweep->add_option("--format", sweep_format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (app.got_subcommand(analyze)) rc = cmd_analyze(c);
    else if (app.got_subcommand(lift_cmd)) rc = cmd_lift(c, lift_k);
    else if (app.got_subcommand(mingens)) rc = cmd_binomials(c, false);
    else if (app.got_subcommand(indisp)) rc = cmd_binomials(c, true);
    else if (app.got_subcommand(cm)) rc = cmd_cm(c, cm_verbose);
    else if (app.got_subcommand(cmth)) rc = cmd_cm_threshold(c);
    else if (app.got_subcommand(betti)) rc = cmd_betti(c, betti_tc, betti_bound);
    else if (app.got_subcommand(strong)) rc = cmd_strong(c);
    else if (app.got_subcommand(sweep)) rc = cmd_sweep(c, sweep_range, sweep_out, sweep_format);
  } catch (const ParseFailure& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == Err::BoundTooSmall ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (c.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "timing: " << ms << " ms\n";
  }
  return rc;
}
