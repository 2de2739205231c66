#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "depth.hpp"
#include "filtration.hpp"
#include "io.hpp"
#include "lexass.hpp"
#include "oracle.hpp"
#include "sweep.hpp"

namespace lexseg {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int usage = 2;
} // namespace exit_code

namespace detail {

struct SpecArgs {
  int n = 0, d = 0;
  std::string u, v;

  void add_to(CLI::App &cmd, bool required = true) {
    auto *a = cmd.add_option("--n", n, "number of variables");
    auto *b = cmd.add_option("--d", d, "degree of u and v");
    auto *c = cmd.add_option("--u", u, "lex-larger end, e.g. x1*x2");
    auto *e = cmd.add_option("--v", v, "lex-smaller end, e.g. x2*x3");
    if (required)
      for (auto *o : {a, b, c, e})
        o->required();
  }

  bool given() const { return n != 0 || d != 0 || !u.empty() || !v.empty(); }

  LexSpec spec() const {
    if (n < 1)
      throw spec_error("--n must be at least 1");
    auto nn = static_cast<std::size_t>(n);
    return LexSpec(nn, d, parse_monomial(u, nn), parse_monomial(v, nn));
  }
};

inline MonomialIdeal read_ideal_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open " + path, 0);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw parse_error(path + ": " + e.what(), e.byte);
  }
  return ideal_from_json(j);
}

/// "LO..HI" or a single integer.
inline std::pair<int, int> parse_range(const std::string &s) {
  auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int x = std::stoi(s, &used);
      if (used != s.size())
        throw parse_error("bad range '" + s + "'", used);
      return {x, x};
    }
    std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
    int a = std::stoi(lo, &used);
    if (used != lo.size())
      throw parse_error("bad range '" + s + "'", used);
    int b = std::stoi(hi, &used);
    if (used != hi.size())
      throw parse_error("bad range '" + s + "'", dots + 2 + used);
    return {a, b};
  } catch (const std::logic_error &) {
    throw parse_error("bad range '" + s + "'", 0);
  }
}

inline std::vector<long> parse_primes(const std::string &s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      long p = std::stol(tok, &used);
      if (used != tok.size())
        throw std::invalid_argument(tok);
      out.push_back(p);
    } catch (const std::logic_error &) {
      throw parse_error("bad prime '" + tok + "'", 0);
    }
  }
  if (out.empty())
    throw parse_error("no primes given", 0);
  for (long p : out)
    if (!is_prime_number(p))
      throw parse_error(std::to_string(p) + " is not prime", 0);
  return out;
}

inline json verification_json(const PrimeFiltration &F, bool &ok) {
  json v = json::object();
  auto add = [&](const char *key, const Report &r) {
    v[key] = {{"passed", r.passed()}, {"violations", r.summary()}};
    ok = ok && r.passed();
  };
  add("prime_filtration", verify_prime_filtration(F));
  add("pretty_clean", verify_pretty_clean(F));
  add("supp_equals_ass", supp_equals_ass(F));
  return v;
}

inline json spec_json(const LexSpec &s) {
  return {{"n", s.n()},
          {"d", s.d()},
          {"u", s.u().to_string()},
          {"v", s.v().to_string()},
          {"kind", to_string(classify(s).kind)}};
}

inline void print(std::ostream &out, const json &j) { out << j.dump(2) << "\n"; }

} // namespace detail

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a verification
/// fails, 2 on usage or parse errors.
inline int run_command(const std::vector<std::string> &args, std::ostream &out,
                       std::ostream &err) {
  CLI::App app{"Associated primes, depth and pretty clean filtrations of "
               "lexsegment ideals"};
  app.require_subcommand(1);
  int status = exit_code::ok;

  // ass
  detail::SpecArgs ass_spec;
  std::string ass_method = "both";
  bool ass_json = false;
  auto *ass = app.add_subcommand("ass", "associated primes of a lexsegment ideal");
  ass_spec.add_to(*ass);
  ass->add_option("--method", ass_method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  ass->add_flag("--json", ass_json, "JSON output (the default)");

  // oracle-ass, decompose
  std::string oracle_file, decompose_file;
  auto *oracle_cmd =
      app.add_subcommand("oracle-ass", "associated primes of any monomial ideal");
  oracle_cmd->add_option("--ideal", oracle_file, "ideal as JSON")->required();
  auto *decompose =
      app.add_subcommand("decompose", "irredundant irreducible decomposition");
  decompose->add_option("--ideal", decompose_file, "ideal as JSON")->required();

  // depth
  detail::SpecArgs depth_spec;
  std::string depth_file;
  bool depth_exact_flag = false;
  long depth_p = 32003;
  auto *depth = app.add_subcommand("depth", "depth of S/I");
  depth_spec.add_to(*depth, false);
  depth->add_option("--ideal", depth_file, "ideal as JSON");
  depth->add_flag("--exact", depth_exact_flag, "compute depth from Betti numbers");
  depth->add_option("--p", depth_p, "field characteristic for --exact");

  // filtration
  detail::SpecArgs filt_spec;
  std::string filt_file, strategy;
  bool filt_verify = false;
  auto *filt = app.add_subcommand("filtration", "prime filtration of S/I");
  filt_spec.add_to(*filt, false);
  filt->add_option("--ideal", filt_file, "ideal as JSON (greedy or search)");
  filt->add_option("--strategy", strategy, "greedy, staged or search")
      ->check(CLI::IsMember({"greedy", "staged", "search"}));
  filt->add_flag("--verify", filt_verify, "run the filtration verifiers");

  // stanley
  detail::SpecArgs st_spec;
  int st_bound = -1;
  auto *stanley = app.add_subcommand(
      "stanley", "Stanley decomposition from the staged filtration");
  st_spec.add_to(*stanley);
  stanley->add_option("--degree-bound", st_bound,
                      "cover check degree (default d + max witness degree + 2)");

  // sweep
  std::string sw_n = "2..4", sw_d = "2..3", sw_p = "32003,2", sw_json;
  unsigned sw_jobs = 1;
  std::size_t sw_cap = 100000;
  auto *sweep_cmd = app.add_subcommand("sweep", "exhaustive verification sweep");
  sweep_cmd->add_option("--n", sw_n, "range LO..HI");
  sweep_cmd->add_option("--d", sw_d, "range LO..HI");
  sweep_cmd->add_option("--jobs", sw_jobs, "worker threads");
  sweep_cmd->add_option("--p", sw_p, "field primes, comma separated");
  sweep_cmd->add_option("--json", sw_json, "write the full report here");
  sweep_cmd->add_option("--cap", sw_cap, "maximum (u, v) pairs per (n, d)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return exit_code::ok;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  try {
    if (ass->parsed()) {
      LexSpec s = ass_spec.spec();
      json j = {{"spec", detail::spec_json(s)}};
      std::set<PrimeIdeal> closed, oracle;
      if (ass_method != "oracle") {
        closed = associated_primes_lexsegment(s);
        j["closed"] = to_json(closed);
      }
      if (ass_method != "closed") {
        auto r = associated_primes_oracle(lexsegment_generators(s));
        oracle = r.primes;
        j["oracle"] = to_json(oracle);
        json w = json::array();
        for (const auto &[p, m] : r.witnesses)
          w.push_back({{"prime", to_json(p)}, {"witness", m.to_string()}});
        j["witnesses"] = w;
      }
      if (ass_method == "both") {
        j["agree"] = closed == oracle;
        if (closed != oracle)
          status = exit_code::mismatch;
      }
      detail::print(out, j);
    } else if (oracle_cmd->parsed()) {
      auto I = detail::read_ideal_file(oracle_file);
      auto r = associated_primes_oracle(I);
      json w = json::array();
      for (const auto &[p, m] : r.witnesses)
        w.push_back({{"prime", to_json(p)}, {"witness", to_json(m)}});
      detail::print(out, {{"ideal", to_json(I)},
                          {"primes", to_json(r.primes)},
                          {"witnesses", w}});
    } else if (decompose->parsed()) {
      auto I = detail::read_ideal_file(decompose_file);
      json comps = json::array();
      for (const auto &c : irreducible_decomposition(I))
        comps.push_back(to_json(c.to_ideal()));
      detail::print(out, {{"ideal", to_json(I)}, {"components", comps}});
    } else if (depth->parsed()) {
      if (depth_spec.given() == !depth_file.empty())
        throw CLI::ValidationError("depth needs either --n --d --u --v or --ideal");
      if (!depth_file.empty()) {
        if (!depth_exact_flag)
          throw CLI::ValidationError("depth --ideal needs --exact");
        auto I = detail::read_ideal_file(depth_file);
        detail::print(out, {{"ideal", to_json(I)},
                            {"p", depth_p},
                            {"exact", depth_exact(I, depth_p)}});
      } else {
        LexSpec s = depth_spec.spec();
        json j = {{"spec", detail::spec_json(s)}};
        auto nf = normalize_spec(s);
        std::optional<DepthCase> dc;
        if (nf.working && nf.working->d() >= 2 &&
            classify(*nf.working).kind == SpecKind::Arbitrary) {
          dc = depth_class(*nf.working);
          j["working_spec"] = detail::spec_json(*nf.working);
          j["class"] = to_string(*dc);
        } else {
          j["class"] = nullptr;
        }
        if (depth_exact_flag) {
          int e = depth_exact(lexsegment_generators(s), depth_p);
          j["p"] = depth_p;
          j["exact"] = e;
          if (dc) {
            int w = depth_exact(lexsegment_generators(*nf.working), depth_p);
            j["working_exact"] = w;
            DepthLevel lv = w == 0 ? DepthLevel::Zero
                            : w == 1 ? DepthLevel::One
                                     : DepthLevel::AtLeastTwo;
            j["agree"] = lv == level(*dc);
            if (lv != level(*dc))
              status = exit_code::mismatch;
          }
        }
        detail::print(out, j);
      }
    } else if (filt->parsed()) {
      if (filt_spec.given() == !filt_file.empty())
        throw CLI::ValidationError(
            "filtration needs either --n --d --u --v or --ideal");
      PrimeFiltration F;
      std::string used;
      json j = json::object();
      if (!filt_file.empty()) {
        auto I = detail::read_ideal_file(filt_file);
        if (strategy == "staged")
          throw CLI::ValidationError("the staged strategy needs a lexsegment");
        if (strategy == "search") {
          auto r = search_filtration(I);
          if (!r)
            throw internal_error("search found no pretty clean filtration");
          F = *r;
          used = "search";
        } else {
          F = greedy_filtration(I);
          used = "greedy";
          if (strategy.empty() && !verify_pretty_clean(F).passed()) {
            if (auto r = search_filtration(I)) {
              F = *r;
              used = "search";
            }
          }
        }
      } else {
        LexSpec s = filt_spec.spec();
        j["spec"] = detail::spec_json(s);
        auto I = lexsegment_generators(s);
        if (strategy == "search") {
          auto r = search_filtration(I);
          if (!r)
            throw internal_error("search found no pretty clean filtration");
          F = *r;
          used = "search";
        } else if (strategy != "staged") {
          F = greedy_filtration(I);
          used = "greedy";
        }
        if (strategy == "staged" ||
            (strategy.empty() && !verify_pretty_clean(F).passed())) {
          auto r = staged_filtration_report(s);
          F = r.filtration;
          used = "staged";
          json dropped = json::array();
          for (const auto &b : r.dropped)
            dropped.push_back(to_json(b));
          j["stages_dropped"] = dropped;
        }
      }
      j["strategy"] = used;
      j["filtration"] = to_json(F);
      if (filt_verify) {
        bool ok = true;
        j["verify"] = detail::verification_json(F, ok);
        if (!ok)
          status = exit_code::mismatch;
      }
      detail::print(out, j);
    } else if (stanley->parsed()) {
      LexSpec s = st_spec.spec();
      auto I = lexsegment_generators(s);
      auto F = staged_filtration(s);
      auto D = stanley_decomposition(F);
      int bound = st_bound >= 0 ? st_bound : s.d() + max_witness_degree(F) + 2;
      auto cover = disjoint_cover_check(I, D, bound);
      int sd = sdepth_lower_bound(D);
      int dep = depth_exact(I);
      json spaces = json::array();
      for (const auto &sp : D.spaces)
        spaces.push_back({{"witness", to_json(sp.witness)}, {"free", sp.free_vars}});
      detail::print(out, {{"spec", detail::spec_json(s)},
                          {"spaces", spaces},
                          {"sdepth_lower_bound", sd},
                          {"depth", dep},
                          {"cover",
                           {{"degree_bound", bound},
                            {"standard_monomials", cover.standard_monomials},
                            {"misses", cover.misses.size()},
                            {"double_covers", cover.double_covers.size()},
                            {"covered_in_ideal", cover.covered_in_ideal.size()},
                            {"passed", cover.passed()}}}});
      if (!cover.passed() || sd < dep)
        status = exit_code::mismatch;
    } else if (sweep_cmd->parsed()) {
      SweepOptions o;
      std::tie(o.n_lo, o.n_hi) = detail::parse_range(sw_n);
      std::tie(o.d_lo, o.d_hi) = detail::parse_range(sw_d);
      o.primes = detail::parse_primes(sw_p);
      o.jobs = sw_jobs;
      o.pair_cap = sw_cap;
      auto r = sweep(o);
      json j = to_json(r);
      if (!sw_json.empty()) {
        std::ofstream f(sw_json);
        if (!f)
          throw parse_error("cannot write " + sw_json, 0);
        f << j.dump(2) << "\n";
      }
      json summary = j;
      summary["mismatch_records"] = j["mismatch_records"].size();
      summary["findings"]["greedy_not_pretty_clean"] =
          r.greedy_not_pretty_clean.size();
      summary["findings"]["stages_dropped"] = r.stages_dropped.size();
      detail::print(out, summary);
      if (!r.passed())
        status = exit_code::mismatch;
    }
  } catch (const CLI::ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const internal_error &e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::mismatch;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return status;
}

} // namespace lexseg
