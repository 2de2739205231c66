#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "depth.hpp"
#include "filtration.hpp"
#include "io.hpp"
#include "lexass.hpp"
#include "oracle.hpp"

namespace lexseg {

struct SweepOptions {
  int n_lo = 2, n_hi = 4;
  int d_lo = 2, d_hi = 3;
  /// Field characteristics for depth_exact; the first one is compared with
  /// depth_class, all of them with each other.
  std::vector<long> primes{32003, 2};
  unsigned jobs = 1;
  /// Refuse any (n, d) with more (u, v) pairs than this.
  std::size_t pair_cap = 100000;
  std::size_t node_budget = 200000;
  bool ass = true, filtration = true, depth = true, stanley = true;
};

/// Check families, in report order.
inline const std::vector<std::string> &sweep_families() {
  static const std::vector<std::string> f{"ass", "filtration", "depth",
                                          "field", "stanley"};
  return f;
}

struct FamilyCounts {
  std::size_t tested = 0, agreements = 0, mismatches = 0;
};

struct Mismatch {
  std::string family;
  std::string spec;
  std::string detail;
  /// Only for the "ass" family.
  std::set<PrimeIdeal> closed, oracle;
};

/// Outcome of every family on one spec. `applies` is false where a family
/// has nothing to compare (depth on non-arbitrary specs).
struct SpecOutcome {
  LexSpec spec;
  std::vector<bool> applies, agrees;
  std::vector<Mismatch> mismatches;
  bool greedy_pretty_clean = true;
  std::size_t stages_dropped = 0;
};

struct SweepReport {
  SweepOptions options;
  std::size_t specs = 0;
  std::vector<FamilyCounts> counts; // indexed like sweep_families()
  std::vector<Mismatch> mismatches;
  /// Specs where greedy_filtration is not pretty clean.
  std::vector<std::string> greedy_not_pretty_clean;
  /// Specs whose staged filtration had to skip a prescribed stage ideal.
  std::vector<std::string> stages_dropped;
  double seconds = 0;

  std::size_t total_mismatches() const {
    std::size_t m = 0;
    for (const auto &c : counts)
      m += c.mismatches;
    return m;
  }
  bool passed() const { return total_mismatches() == 0; }
};

/// Number of (u, v) pairs with u >= v among the degree-d monomials in n
/// variables.
inline std::size_t sweep_pair_count(std::size_t n, int d) {
  // C(n + d - 1, d) monomials, computed incrementally to stay exact.
  std::size_t m = 1;
  for (int k = 1; k <= d; ++k)
    m = m * (n - 1 + static_cast<std::size_t>(k)) / static_cast<std::size_t>(k);
  return m * (m + 1) / 2;
}

namespace detail {

inline std::string set_string(const std::set<PrimeIdeal> &s) {
  std::string out = "{";
  for (const auto &p : s)
    out += (out.size() > 1 ? ", " : "") + p.to_string();
  return out + "}";
}

inline void check_ass(const LexSpec &s, const MonomialIdeal &I,
                      SpecOutcome &o) {
  auto closed = associated_primes_lexsegment(s);
  auto oracle = associated_primes_oracle(I).primes;
  o.applies[0] = true;
  o.agrees[0] = closed == oracle;
  if (!o.agrees[0])
    o.mismatches.push_back({"ass", s.to_string(),
                            "closed " + set_string(closed) + " oracle " +
                                set_string(oracle),
                            closed, oracle});
}

inline void check_filtration(const LexSpec &s, const MonomialIdeal &I,
                             const SweepOptions &opt, SpecOutcome &o,
                             std::optional<PrimeFiltration> &staged) {
  o.applies[1] = true;
  auto r = staged_filtration_report(s, opt.node_budget);
  o.stages_dropped = r.dropped.size();
  std::string bad;
  auto note = [&](const char *what, const Report &rep) {
    if (!rep.passed())
      bad += std::string(bad.empty() ? "" : "; ") + what + ": " + rep.summary();
  };
  note("prime filtration", verify_prime_filtration(r.filtration));
  note("pretty clean", verify_pretty_clean(r.filtration));
  note("supp = ass", supp_equals_ass(r.filtration));
  auto G = greedy_filtration(I);
  note("greedy prime filtration", verify_prime_filtration(G));
  o.greedy_pretty_clean = verify_pretty_clean(G).passed();
  if (!search_filtration(I, opt.node_budget))
    bad += std::string(bad.empty() ? "" : "; ") + "search found nothing";
  o.agrees[1] = bad.empty();
  if (!bad.empty())
    o.mismatches.push_back({"filtration", s.to_string(), bad, {}, {}});
  staged = std::move(r.filtration);
}

/// Exact depth over each configured field; records field disagreement.
inline int check_field(const LexSpec &s, const MonomialIdeal &I,
                       const SweepOptions &opt, SpecOutcome &o) {
  o.applies[3] = true;
  std::vector<int> depths;
  for (long p : opt.primes)
    depths.push_back(depth_exact(I, p));
  o.agrees[3] = std::adjacent_find(depths.begin(), depths.end(),
                                   std::not_equal_to<>()) == depths.end();
  if (!o.agrees[3]) {
    std::string d;
    for (std::size_t k = 0; k < depths.size(); ++k)
      d += (k ? ", " : "") + std::string("GF(") +
           std::to_string(opt.primes[k]) + ") " + std::to_string(depths[k]);
    o.mismatches.push_back({"field", s.to_string(), d, {}, {}});
  }
  return depths.front();
}

inline void check_depth(const LexSpec &s, const SweepOptions &opt,
                        SpecOutcome &o) {
  auto nf = normalize_spec(s);
  if (!nf.working || nf.working->d() < 2 ||
      classify(*nf.working).kind != SpecKind::Arbitrary)
    return;
  const LexSpec &w = *nf.working;
  o.applies[2] = true;
  DepthLevel cls = level(depth_class(w));
  int exact = depth_exact(lexsegment_generators(w), opt.primes.front());
  DepthLevel ex = exact == 0   ? DepthLevel::Zero
                  : exact == 1 ? DepthLevel::One
                               : DepthLevel::AtLeastTwo;
  o.agrees[2] = cls == ex;
  if (!o.agrees[2])
    o.mismatches.push_back({"depth", s.to_string(),
                            std::string("class ") + to_string(depth_class(w)) +
                                " on " + w.to_string() + ", exact depth " +
                                std::to_string(exact),
                            {}, {}});
}

inline void check_stanley(const LexSpec &s, const MonomialIdeal &I,
                          const PrimeFiltration &F, int depth, SpecOutcome &o) {
  o.applies[4] = true;
  auto D = stanley_decomposition(F);
  int bound = sdepth_lower_bound(D);
  int deg = s.d() + max_witness_degree(F) + 2;
  auto cover = disjoint_cover_check(I, D, deg);
  std::string bad;
  if (bound < depth)
    bad = "sdepth bound " + std::to_string(bound) + " < depth " +
          std::to_string(depth);
  if (!cover.passed())
    bad += (bad.empty() ? "" : "; ") + std::string("cover check at degree ") +
           std::to_string(deg) + ": " + std::to_string(cover.misses.size()) +
           " misses, " + std::to_string(cover.double_covers.size()) +
           " double covers, " + std::to_string(cover.covered_in_ideal.size()) +
           " covered in I";
  o.agrees[4] = bad.empty();
  if (!bad.empty())
    o.mismatches.push_back({"stanley", s.to_string(), bad, {}, {}});
}

} // namespace detail

/// Runs every enabled check family on one spec. Exceptions are recorded as
/// mismatches of the family that raised them.
inline SpecOutcome check_spec(const LexSpec &s, const SweepOptions &opt) {
  const auto nf = sweep_families().size();
  SpecOutcome o{s, std::vector<bool>(nf, false), std::vector<bool>(nf, false),
                {}, true, 0};
  const MonomialIdeal I = lexsegment_generators(s);
  auto guarded = [&](std::size_t fam, auto &&fn) {
    try {
      fn();
    } catch (const std::exception &e) {
      o.applies[fam] = true;
      o.agrees[fam] = false;
      o.mismatches.push_back(
          {sweep_families()[fam], s.to_string(), e.what(), {}, {}});
    }
  };
  if (opt.ass)
    guarded(0, [&] { detail::check_ass(s, I, o); });
  std::optional<PrimeFiltration> staged;
  if (opt.filtration || opt.stanley)
    guarded(1, [&] { detail::check_filtration(s, I, opt, o, staged); });
  if (!opt.filtration)
    o.applies[1] = false;
  std::optional<int> depth;
  if (opt.depth || opt.stanley)
    guarded(3, [&] { depth = detail::check_field(s, I, opt, o); });
  if (opt.depth)
    guarded(2, [&] { detail::check_depth(s, opt, o); });
  else
    o.applies[3] = false;
  if (opt.stanley && staged && depth)
    guarded(4, [&] { detail::check_stanley(s, I, *staged, *depth, o); });
  return o;
}

/// All lexsegment specs of the sweep, ordered by n, d, then u and v
/// lex-descending.
inline std::vector<LexSpec> sweep_specs(const SweepOptions &opt) {
  std::vector<LexSpec> out;
  for (int n = opt.n_lo; n <= opt.n_hi; ++n)
    for (int d = opt.d_lo; d <= opt.d_hi; ++d) {
      if (n < 1 || d < 1)
        throw std::invalid_argument("sweep ranges need n >= 1 and d >= 1");
      auto nn = static_cast<std::size_t>(n);
      if (sweep_pair_count(nn, d) > opt.pair_cap)
        throw std::length_error(
            "refusing n=" + std::to_string(n) + " d=" + std::to_string(d) +
            ": " + std::to_string(sweep_pair_count(nn, d)) +
            " pairs exceed the cap of " + std::to_string(opt.pair_cap));
      auto M = enumerate_degree(nn, d);
      for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = i; j < M.size(); ++j)
          out.emplace_back(nn, d, M[i], M[j]);
    }
  return out;
}

inline SweepReport merge_outcomes(const SweepOptions &opt,
                                  const std::vector<SpecOutcome> &outcomes) {
  SweepReport r;
  r.options = opt;
  r.specs = outcomes.size();
  r.counts.assign(sweep_families().size(), {});
  for (const auto &o : outcomes) {
    for (std::size_t f = 0; f < r.counts.size(); ++f) {
      if (!o.applies[f])
        continue;
      ++r.counts[f].tested;
      ++(o.agrees[f] ? r.counts[f].agreements : r.counts[f].mismatches);
    }
    r.mismatches.insert(r.mismatches.end(), o.mismatches.begin(),
                        o.mismatches.end());
    if (!o.greedy_pretty_clean)
      r.greedy_not_pretty_clean.push_back(o.spec.to_string());
    if (o.stages_dropped)
      r.stages_dropped.push_back(o.spec.to_string());
  }
  return r;
}

inline SweepReport sweep(const SweepOptions &opt) {
  if (opt.primes.empty())
    throw std::invalid_argument("sweep needs at least one field prime");
  for (long p : opt.primes)
    if (!detail::is_prime_number(p))
      throw std::invalid_argument(std::to_string(p) + " is not prime");
  auto start = std::chrono::steady_clock::now();
  auto specs = sweep_specs(opt);
  std::vector<std::optional<SpecOutcome>> slots(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < specs.size();)
      slots[i] = check_spec(specs[i], opt);
  };
  unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  std::vector<SpecOutcome> outcomes;
  for (auto &o : slots)
    outcomes.push_back(std::move(*o));
  auto r = merge_outcomes(opt, outcomes);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

inline json to_json(const SweepReport &r) {
  json counts = json::object();
  std::size_t tested = 0, agreements = 0, mismatches = 0;
  for (std::size_t f = 0; f < r.counts.size(); ++f) {
    const auto &c = r.counts[f];
    counts[sweep_families()[f]] = {{"tested", c.tested},
                                   {"agreements", c.agreements},
                                   {"mismatches", c.mismatches}};
    tested += c.tested;
    agreements += c.agreements;
    mismatches += c.mismatches;
  }
  json mm = json::array();
  for (const auto &m : r.mismatches) {
    json e = {{"family", m.family}, {"spec", m.spec}, {"detail", m.detail}};
    if (m.family == "ass") {
      e["closed"] = to_json(m.closed);
      e["oracle"] = to_json(m.oracle);
    }
    mm.push_back(e);
  }
  return {
      {"parameters",
       {{"n_range", {r.options.n_lo, r.options.n_hi}},
        {"d_range", {r.options.d_lo, r.options.d_hi}},
        {"primes", r.options.primes}}},
      {"specs", r.specs},
      {"counts",
       {{"tested", tested},
        {"agreements", agreements},
        {"mismatches", mismatches}}},
      {"families", counts},
      {"mismatch_records", mm},
      {"findings",
       {{"greedy_not_pretty_clean", r.greedy_not_pretty_clean},
        {"stages_dropped", r.stages_dropped}}},
      {"timing", {{"seconds", r.seconds}}},
  };
}

} // namespace lexseg
