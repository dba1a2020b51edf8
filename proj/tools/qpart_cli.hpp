#pragma once

// Command-line front end. Kept in a header so tests can drive run_cli()
// directly with in-memory streams.
//
// Exit status: 0 when every check passed, 1 on a mismatch (the counterexample
// is printed), 2 on usage or configuration errors.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpart/qpart.hpp"

namespace qpart::cli {

enum class Format { text, json, csv };

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::string target;
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<int> ijkl_max;
  std::optional<int> degree;
  std::optional<int> lm_max;
  std::optional<int> idx_max;
  std::optional<int> count;
  std::optional<std::string> markers;
  std::optional<std::string> freq;
  std::string mutate;
  Format format = Format::text;
  std::string out_path;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, std::size_t expected, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (const auto eq = item.find('='); eq != std::string::npos) item = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + what + ": '" + s + "'");
    }
  }
  if (out.size() != expected) throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " values");
  for (int v : out)
    if (v < 0) throw UsageError(std::string(what) + " values must be nonnegative");
  return out;
}

inline MarkerExponents parse_markers(const std::string& s) {
  auto v = parse_int_list(s, 4, "--markers");
  return {v[0], v[1], v[2], v[3]};
}

/// Either 11 comma-separated counts or name=count pairs such as "a=1,bc=2,Q=1".
inline FreqVector parse_freq(const std::string& s) {
  if (s.find('=') != std::string::npos) {
    static const std::array<std::string, kColorCount> kNames = {"a",  "b",  "c",  "d",  "ab", "ac",
                                                                "ad", "bc", "bd", "cd", "Q"};
    std::array<int, kColorCount> a{};
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
      const auto eq = item.find('=');
      const auto it = std::find(kNames.begin(), kNames.end(), item.substr(0, eq));
      if (eq == std::string::npos || it == kNames.end()) throw UsageError("bad --freq entry '" + item + "'");
      a[it - kNames.begin()] = parse_int_list(item.substr(eq + 1), 1, "--freq")[0];
    }
    return FreqVector(a);
  }
  auto v = parse_int_list(s, 11, "--freq");
  std::array<int, kColorCount> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return FreqVector(a);
}

inline int require_nonneg(std::optional<int> v, int fallback, const char* name) {
  const int x = v.value_or(fallback);
  if (x < 0) throw UsageError(std::string(name) + " must be nonnegative");
  return x;
}

inline nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json j{{"identity", r.identity}, {"cells_checked", r.cells_checked},
                   {"status", r.passed() ? "pass" : "fail"}};
  if (r.counterexample) {
    const auto& ce = *r.counterexample;
    j["counterexample"] = {{"cell", ce.cell},
                           {"degree", ce.degree},
                           {"markers", {ce.markers.i, ce.markers.j, ce.markers.k, ce.markers.l}},
                           {"lhs", ce.lhs},
                           {"rhs", ce.rhs}};
  }
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline void write_report(const VerificationReport& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::text:
      out << r.to_text() << '\n';
      break;
    case Format::json:
      out << report_json(r).dump() << '\n';
      break;
    case Format::csv: {
      out << "identity,cells_checked,status,cell,degree,markers,lhs,rhs\n";
      out << csv_field(r.identity) << ',' << r.cells_checked << ',' << (r.passed() ? "pass" : "fail");
      if (r.counterexample) {
        const auto& ce = *r.counterexample;
        out << ',' << csv_field(ce.cell) << ',' << ce.degree << ',' << csv_field(ce.markers.to_string()) << ','
            << csv_field(ce.lhs) << ',' << csv_field(ce.rhs);
      } else {
        out << ",,,,,";
      }
      out << '\n';
      break;
    }
  }
}

inline KeyIdentityOptions key_options(const RunConfig& c) {
  KeyIdentityOptions o;
  if (c.mutate == "drop-linear-secondary") o.subtract_linear_secondary = false;
  return o;
}

inline G2Rules g2_rules(const RunConfig& c) {
  G2Rules r;
  if (c.mutate == "quaternary-bound") r.bound_base = 3;
  return r;
}

inline G1Rules g1_rules(const RunConfig& c) {
  G1Rules r;
  if (c.mutate == "multiple-gap") r.multiple_gap = 45;
  return r;
}

inline VerificationReport run_verify(const RunConfig& c) {
  const std::string& id = c.target;
  auto idx = [&](int fallback) { return require_nonneg(c.ijkl_max, fallback, "--ijkl-max"); };
  auto deg = [&](int fallback) { return require_nonneg(c.degree, fallback, "--degree"); };
  auto nmax = [&](int fallback) { return require_nonneg(c.n_max, fallback, "--nmax"); };
  if (id == "key26") {
    const int m = idx(3);
    return verify_key_identity({m, m, m, m}, deg(40), c.jobs, key_options(c));
  }
  if (id == "goellnitz32") return verify_goellnitz_identity(idx(5), deg(50), c.jobs);
  if (id == "schur33") return verify_schur_identity(idx(8), deg(60), c.jobs);
  if (id == "bounded43")
    return verify_bounded_schur(require_nonneg(c.lm_max, 8, "--lm-max"), require_nonneg(c.idx_max, 8, "--idx-max"),
                                c.jobs);
  if (id == "bounded44")
    return verify_bounded_goellnitz(require_nonneg(c.lm_max, 6, "--lm-max"),
                                    require_nonneg(c.idx_max, 6, "--idx-max"), c.jobs);
  if (id == "bounded-limit")
    return bounded_limit_check(require_nonneg(c.lm_max, 30, "--lm-max"), require_nonneg(c.idx_max, 3, "--idx-max"),
                               deg(25));
  if (id == "product41") return full_product_check(deg(30));
  if (id == "thm1") return verify_theorem1(nmax(300), g1_rules(c));
  if (id == "thm1-refined") return verify_theorem1_refined(nmax(150), g1_rules(c));
  if (id == "thm2") return verify_theorem2(nmax(25), idx(3), g2_rules(c));
  if (id == "thmA") return verify_theorem_a(nmax(25), idx(3));
  if (id == "thmG") return verify_theorem_g(nmax(150));
  if (id == "reduction") return reduction_check(idx(3), deg(40));
  if (id == "dilation") return theorem1_genfunc_check(deg(150));
  if (id == "order15") return order_isomorphism_check(require_nonneg(c.count, 15, "--count"));
  if (id == "transport15") return transport_check_15(nmax(120), g2_rules(c), g1_rules(c));
  if (id == "transport6") return transport_check_6(nmax(100));
  if (id == "three-way") {
    const int m = idx(3);
    return three_way_check({m, m, m, m}, nmax(30), c.jobs);
  }
  throw UsageError("unknown identity '" + id + "'");
}

struct TableRow {
  int n;
  CheckedInt p;
  CheckedInt g;
};

inline std::vector<TableRow> build_table(const RunConfig& c) {
  const int n_min = require_nonneg(c.n_min, 0, "--nmin");
  const int n_max = require_nonneg(c.n_max, 30, "--nmax");
  if (n_min > n_max) throw UsageError("--nmin exceeds --nmax");
  std::vector<TableRow> rows;
  auto fill = [&](const std::vector<CheckedInt>& p, const std::vector<CheckedInt>& g) {
    for (int n = n_min; n <= n_max; ++n) rows.push_back({n, p[n], g[n]});
  };
  if (c.target == "thm1") {
    fill(p1_counts(n_max), g1_counts(n_max, g1_rules(c)));
  } else if (c.target == "thmG") {
    fill(pg_counts(n_max), gg_counts(n_max));
  } else if (c.target == "thm2" || c.target == "thmA") {
    const MarkerExponents t = c.markers ? parse_markers(*c.markers) : MarkerExponents{1, 1, 1, c.target == "thm2" ? 1 : 0};
    if (c.target == "thmA" && t.l != 0) throw UsageError("thmA needs l = 0 in --markers");
    const G2Tally tally = c.target == "thm2" ? tally_g2(n_max, t, g2_rules(c)) : tally_ga(n_max, std::max({t.i, t.j, t.k}));
    for (int n = n_min; n <= n_max; ++n) rows.push_back({n, count_p2(n, t), tally.fiber_sum(n, t)});
  } else {
    throw UsageError("unknown table '" + c.target + "'");
  }
  return rows;
}

inline void write_table(const std::string& name, const std::vector<TableRow>& rows, Format format, std::ostream& out) {
  switch (format) {
    case Format::csv:
      out << "n,P,G\n";
      for (const auto& r : rows) out << r.n << ',' << r.p << ',' << r.g << '\n';
      break;
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {"P", r.p.value()}, {"G", r.g.value()}});
      out << nlohmann::json{{"table", name}, {"rows", arr}}.dump() << '\n';
      break;
    }
    case Format::text:
      out << "n\tP\tG\n";
      for (const auto& r : rows) out << r.n << '\t' << r.p << '\t' << r.g << '\n';
      break;
  }
}

inline CheckedInt run_count(const RunConfig& c) {
  const int n = require_nonneg(c.n, 0, "n");
  if (c.target == "p1") return count_p1(n);
  if (c.target == "g1") return count_g1(n, g1_rules(c));
  if (c.target == "pG") return count_pg(n);
  if (c.target == "gG") return count_gg(n);
  if (c.target == "p2") {
    if (!c.markers) throw UsageError("count p2 needs --markers i,j,k,l");
    return count_p2(n, parse_markers(*c.markers));
  }
  if (c.target == "g2") {
    if (c.freq) return count_g2(n, parse_freq(*c.freq), g2_rules(c));
    if (c.markers) {
      const MarkerExponents t = parse_markers(*c.markers);
      return tally_g2(n, t, g2_rules(c)).fiber_sum(n, t);
    }
    throw UsageError("count g2 needs --freq a,b,c,d,ab,ac,ad,bc,bd,cd,Q or --markers i,j,k,l");
  }
  throw UsageError("unknown count '" + c.target + "'");
}

inline std::vector<std::string> run_enumerate(const RunConfig& c) {
  const int n = require_nonneg(c.n, 0, "n");
  std::vector<std::string> out;
  if (c.target == "g2") {
    for (const auto& p : enumerate_g2(n, g2_rules(c))) out.push_back(p.to_string());
  } else if (c.target == "g1") {
    for (const auto& p : enumerate_g1(n, g1_rules(c))) out.push_back(p.to_string());
  } else {
    throw UsageError("unknown enumeration '" + c.target + "'");
  }
  return out;
}

inline int execute(const RunConfig& c, std::ostream& out) {
  if (c.command == "verify") {
    const VerificationReport r = run_verify(c);
    write_report(r, c.format, out);
    return r.passed() ? kPass : kMismatch;
  }
  if (c.command == "count") {
    const CheckedInt v = run_count(c);
    switch (c.format) {
      case Format::text: out << v << '\n'; break;
      case Format::csv: out << "kind,n,count\n" << c.target << ',' << *c.n << ',' << v << '\n'; break;
      case Format::json: out << nlohmann::json{{"kind", c.target}, {"n", *c.n}, {"count", v.value()}}.dump() << '\n'; break;
    }
    return kPass;
  }
  if (c.command == "enumerate") {
    const auto parts = run_enumerate(c);
    switch (c.format) {
      case Format::text:
        for (const auto& p : parts) out << p << '\n';
        break;
      case Format::csv:
        out << "partition\n";
        for (const auto& p : parts) out << csv_field(p) << '\n';
        break;
      case Format::json: out << nlohmann::json{{"kind", c.target}, {"n", *c.n}, {"partitions", parts}}.dump() << '\n'; break;
    }
    return kPass;
  }
  if (c.command == "table") {
    const auto rows = build_table(c);
    write_table(c.target, rows, c.format, out);
    for (const auto& r : rows)
      if (r.p != r.g) return kMismatch;
    return kPass;
  }
  throw UsageError("no command given");
}

}  // namespace detail

/// Parses argv and runs one command. Output goes to `out` unless --out names
/// a file; diagnostics go to `err`.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and q-series verification for four-letter weighted words"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", cfg.out_path, "Write output to this file");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--mutate", cfg.mutate, "Run a deliberately corrupted variant")
      ->check(CLI::IsMember({"drop-linear-secondary", "quaternary-bound", "multiple-gap"}));
  app.fallthrough();

  auto* verify = app.add_subcommand("verify", "Check an identity or theorem");
  verify->add_option("identity", cfg.target, "key26 goellnitz32 schur33 bounded43 bounded44 bounded-limit product41 "
                                             "thm1 thm1-refined thm2 thmA thmG reduction dilation order15 "
                                             "transport15 transport6 three-way")
      ->required();
  verify->add_option("--nmax", cfg.n_max);
  verify->add_option("--ijkl-max", cfg.ijkl_max, "Upper bound for each of i, j, k, l");
  verify->add_option("--degree", cfg.degree, "q-degree truncation");
  verify->add_option("--lm-max", cfg.lm_max, "Upper bound for L and M");
  verify->add_option("--idx-max", cfg.idx_max, "Upper bound for the indices of bounded identities");
  verify->add_option("--count", cfg.count, "Number of symbols for order15");

  auto* count = app.add_subcommand("count", "Count partitions of n");
  count->add_option("kind", cfg.target, "p1 g1 p2 g2 pG gG")->required();
  count->add_option("n", cfg.n)->required();
  count->add_option("--markers", cfg.markers, "i,j,k,l");
  count->add_option("--freq", cfg.freq, "a,b,c,d,ab,ac,ad,bc,bd,cd,Q");

  auto* enumerate = app.add_subcommand("enumerate", "List G-side partitions of n");
  enumerate->add_option("kind", cfg.target, "g2 g1")->required();
  enumerate->add_option("n", cfg.n)->required();

  auto* table = app.add_subcommand("table", "P/G counts over a range of n");
  table->add_option("kind", cfg.target, "thm1 thmG thm2 thmA")->required();
  table->add_option("--nmin", cfg.n_min);
  table->add_option("--nmax", cfg.n_max);
  table->add_option("--markers", cfg.markers, "i,j,k,l (thm2, thmA)");

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  for (auto* sub : {verify, count, enumerate, table})
    if (sub->parsed()) cfg.command = sub->get_name();

  try {
    if (cfg.out_path.empty()) return detail::execute(cfg, out);
    std::ofstream file(cfg.out_path);
    if (!file) throw UsageError("cannot open output file '" + cfg.out_path + "'");
    return detail::execute(cfg, file);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kUsage;
  }
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(std::move(args), out, err);
}

}  // namespace qpart::cli
