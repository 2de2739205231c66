#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "depth.hpp"
#include "lexspec.hpp"
#include "oracle.hpp"

namespace lexseg {

/// One step J_k = J_{k-1} + (witness), with (J_{k-1} : witness) = prime,
/// so that J_k / J_{k-1} is a shifted copy of S / prime.
struct FiltrationStep {
  Monomial witness;
  PrimeIdeal prime;

  friend bool operator==(const FiltrationStep &, const FiltrationStep &) =
      default;
};

/// A multigraded prime filtration of S/I, as the chain of ideals
/// I = J_0 < J_1 < ... < J_r = S.
struct PrimeFiltration {
  MonomialIdeal base;
  std::vector<FiltrationStep> steps;

  /// Distinct primes occurring in the steps.
  std::set<PrimeIdeal> support() const {
    std::set<PrimeIdeal> s;
    for (const auto &st : steps)
      s.insert(st.prime);
    return s;
  }

  /// Chain J_0, ..., J_r.
  std::vector<MonomialIdeal> chain() const {
    std::vector<MonomialIdeal> c{base};
    for (const auto &st : steps)
      c.push_back(ideal_sum(c.back(), st.witness));
    return c;
  }

  friend bool operator==(const PrimeFiltration &, const PrimeFiltration &) =
      default;
};

struct Violation {
  std::size_t index;
  std::size_t other;
  std::string what;
};

struct Report {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  void add(std::size_t i, std::size_t j, std::string what) {
    violations.push_back({i, j, std::move(what)});
  }
  std::string summary() const {
    std::string s;
    for (const auto &v : violations) {
      if (!s.empty())
        s += "; ";
      s += "[" + std::to_string(v.index) + "," + std::to_string(v.other) +
           "] " + v.what;
    }
    return s;
  }
};

/// Chain validity, colon(J_{k-1}, witness_k) = prime_k at every step, and
/// termination at the unit ideal. Step indices in the report are 0-based.
inline Report verify_prime_filtration(const PrimeFiltration &F) {
  Report r;
  MonomialIdeal J = F.base;
  for (std::size_t k = 0; k < F.steps.size(); ++k) {
    const auto &st = F.steps[k];
    if (st.witness.nvars() != J.nvars() || st.prime.nvars() != J.nvars()) {
      r.add(k, k, "step lives in a different ring");
      return r;
    }
    if (J.contains(st.witness))
      r.add(k, k, "witness " + st.witness.to_string() +
                      " already in the running ideal");
    else if (auto c = colon(J, st.witness); c != st.prime.to_ideal())
      r.add(k, k, "colon by " + st.witness.to_string() + " is " +
                      c.to_string() + ", expected " + st.prime.to_string());
    J = ideal_sum(J, st.witness);
  }
  if (!J.is_unit())
    r.add(F.steps.size(), F.steps.size(),
          "chain ends at " + J.to_string() + ", not the unit ideal");
  return r;
}

/// No proper inclusion prime_i < prime_j with i < j.
inline Report verify_pretty_clean(const PrimeFiltration &F) {
  Report r;
  for (std::size_t i = 0; i < F.steps.size(); ++i)
    for (std::size_t j = i + 1; j < F.steps.size(); ++j)
      if (F.steps[i].prime.proper_subset_of(F.steps[j].prime))
        r.add(i, j, F.steps[i].prime.to_string() + " precedes its proper superset " +
                        F.steps[j].prime.to_string());
  return r;
}

/// Supp(F) against the oracle's Ass(S/base); lists the symmetric
/// difference.
inline Report supp_equals_ass(const PrimeFiltration &F) {
  Report r;
  if (F.base.is_unit()) {
    if (!F.steps.empty())
      r.add(0, 0, "unit base with steps");
    return r;
  }
  auto supp = F.support();
  auto ass = associated_primes_oracle(F.base).primes;
  for (const auto &p : supp)
    if (!ass.count(p))
      r.add(0, 0, "in Supp only: " + p.to_string());
  for (const auto &p : ass)
    if (!supp.count(p))
      r.add(0, 0, "in Ass only: " + p.to_string());
  return r;
}

namespace detail {

/// Box large enough to hold, up to capping, every witness for J that lies
/// in A.
inline std::vector<int> stage_box(const MonomialIdeal &J,
                                  const MonomialIdeal &A) {
  auto box = witness_bound(J.nvars(), irreducible_decomposition(J));
  auto ea = A.max_exponents();
  for (std::size_t i = 0; i < box.size(); ++i)
    box[i] = std::max(box[i], ea[i]);
  return box;
}

/// Lex-greatest witness for P over J inside the box that also lies in A.
inline std::optional<Monomial> stage_witness(const MonomialIdeal &J,
                                             const MonomialIdeal &A,
                                             const PrimeIdeal &P,
                                             std::span<const int> box) {
  std::optional<Monomial> found;
  for_each_in_box(box, [&](const Monomial &w) {
    if (!A.contains(w) || !is_witness(J, P, w))
      return true;
    found = w;
    return false;
  });
  return found;
}

/// Greedy steps from J up to A (J subset of A): take the inclusion-maximal
/// primes of Ass(A/J), pick the lex-smallest variable tuple among them and
/// its lex-greatest witness.
inline void extend_greedy(MonomialIdeal J, const MonomialIdeal &A,
                          std::vector<FiltrationStep> &steps) {
  while (J != A) {
    if (J.is_prime() && A.is_unit()) {
      steps.push_back({Monomial::one(J.nvars()), PrimeIdeal::from_ideal(J)});
      return;
    }
    auto box = stage_box(J, A);
    std::set<PrimeIdeal> candidates;
    std::map<PrimeIdeal, Monomial> witnesses;
    for (const auto &p : associated_primes_oracle(J).primes)
      if (auto w = stage_witness(J, A, p, box)) {
        candidates.insert(p);
        witnesses.emplace(p, *w);
      }
    if (candidates.empty())
      throw internal_error("greedy filtration stuck at " + J.to_string() +
                           " below " + A.to_string());
    auto maxes = maximal_elements(candidates);
    const PrimeIdeal &P = *std::min_element(
        maxes.begin(), maxes.end(),
        [](const auto &a, const auto &b) { return a.vars() < b.vars(); });
    const Monomial &w = witnesses.at(P);
    steps.push_back({w, P});
    J = ideal_sum(J, w);
  }
}

} // namespace detail

/// Prime filtration of S/I built greedily, largest primes first. Always a
/// valid prime filtration; pretty-cleanness is not guaranteed when Ass is
/// not totally ordered and must be checked separately.
inline PrimeFiltration greedy_filtration(const MonomialIdeal &I) {
  detail::check_proper_nonzero(I, "greedy_filtration");
  PrimeFiltration F{I, {}};
  detail::extend_greedy(I, MonomialIdeal::unit(I.nvars()), F.steps);
  return F;
}

namespace detail {

enum class SearchOutcome { Found, Exhausted, OutOfBudget };

struct SearchState {
  std::vector<MonomialIdeal> targets;
  std::size_t stage = 0;
  std::size_t budget;
  bool out_of_budget = false;
  std::set<std::pair<MonomialIdeal, std::set<PrimeIdeal>>> dead;
};

/// Depth-first search for steps from J through every ideal of st.targets in
/// turn, keeping the whole filtration (prior steps included) pretty clean.
/// Primes of Ass(S/J) with a witness in the current target are tried
/// maximal-first with the lex-smallest tuple first, witnesses in
/// lex-descending order, so the first descent is the greedy choice.
inline bool search_rec(const MonomialIdeal &J,
                       std::vector<FiltrationStep> &steps, SearchState &st) {
  const MonomialIdeal &target = st.targets[st.stage];
  if (J == target) {
    if (st.stage + 1 == st.targets.size())
      return true;
    ++st.stage;
    bool ok = search_rec(J, steps, st);
    --st.stage;
    return ok;
  }
  if (st.budget == 0) {
    st.out_of_budget = true;
    return false;
  }
  --st.budget;

  std::set<PrimeIdeal> used;
  for (const auto &s : steps)
    used.insert(s.prime);
  auto key = std::make_pair(J, used);
  if (st.dead.count(key))
    return false;

  auto comps = irreducible_decomposition(J);
  std::set<PrimeIdeal> ass;
  for (const auto &c : comps)
    ass.insert(c.radical());
  // Every prime of Ass(S/J) occurs in any prime filtration of S/J, so one
  // lying properly above an already used prime is fatal.
  for (const auto &p : ass)
    for (const auto &u : used)
      if (u.proper_subset_of(p)) {
        st.dead.insert(key);
        return false;
      }

  auto box = stage_box(J, target);
  std::set<PrimeIdeal> candidates;
  for (const auto &p : ass)
    if (stage_witness(J, target, p, box))
      candidates.insert(p);
  auto maxes = maximal_elements(candidates);
  std::sort(maxes.begin(), maxes.end(),
            [](const auto &a, const auto &b) { return a.vars() < b.vars(); });
  std::vector<PrimeIdeal> order = maxes;
  for (const auto &p : candidates)
    if (std::find(maxes.begin(), maxes.end(), p) == maxes.end())
      order.push_back(p);

  for (const auto &P : order) {
    bool done = false;
    for_each_in_box(box, [&](const Monomial &w) {
      if (!target.contains(w) || !is_witness(J, P, w))
        return true;
      steps.push_back({w, P});
      if (search_rec(ideal_sum(J, w), steps, st)) {
        done = true;
        return false;
      }
      steps.pop_back();
      return !st.out_of_budget;
    });
    if (done)
      return true;
    if (st.out_of_budget)
      return false;
  }
  st.dead.insert(key);
  return false;
}

/// Appends steps from J through each of `targets` (an ascending chain of
/// ideals containing J) to `steps`. On failure `steps` is left unchanged.
inline SearchOutcome extend_through(const MonomialIdeal &J,
                                    std::vector<MonomialIdeal> targets,
                                    std::vector<FiltrationStep> &steps,
                                    std::size_t node_budget) {
  SearchState st{std::move(targets), 0, node_budget, false, {}};
  auto before = steps.size();
  if (search_rec(J, steps, st))
    return SearchOutcome::Found;
  steps.resize(before);
  return st.out_of_budget ? SearchOutcome::OutOfBudget
                          : SearchOutcome::Exhausted;
}

inline bool extend_pretty_clean(const MonomialIdeal &J, const MonomialIdeal &A,
                                std::vector<FiltrationStep> &steps,
                                std::size_t node_budget) {
  return extend_through(J, {A}, steps, node_budget) == SearchOutcome::Found;
}

} // namespace detail

/// Depth-first search for a pretty clean filtration of S/I. Its first
/// candidate is the greedy filtration. Returns nullopt when none exists or
/// `node_budget` runs out.
inline std::optional<PrimeFiltration>
search_filtration(const MonomialIdeal &I, std::size_t node_budget = 200000) {
  detail::check_proper_nonzero(I, "search_filtration");
  PrimeFiltration F{I, {}};
  if (!detail::extend_pretty_clean(I, MonomialIdeal::unit(I.nvars()), F.steps,
                                   node_budget))
    return std::nullopt;
  return F;
}

namespace detail {

inline PrimeFiltration lift_by_x1_power(const LexSpec &s,
                                        const PrimeFiltration &inner) {
  const auto n = s.n();
  const int b1 = s.b1();
  PrimeFiltration F{lexsegment_generators(s), {}};
  Monomial x1b = Monomial::var(n, 1, b1);
  for (const auto &st : inner.steps)
    F.steps.push_back({st.witness * x1b, st.prime});
  PrimeIdeal x1(n, {1});
  for (int k = b1 - 1; k >= 0; --k)
    F.steps.push_back({Monomial::var(n, 1, k), x1});
  return F;
}

inline PrimeFiltration embed_shifted(const LexSpec &s, std::size_t offset,
                                     const PrimeFiltration &inner) {
  PrimeFiltration F{lexsegment_generators(s), {}};
  for (const auto &st : inner.steps)
    F.steps.push_back({st.witness.pad_front(offset), st.prime.shifted(offset)});
  return F;
}

} // namespace detail

/// A staged filtration with its intermediate stage ideals (strictly between
/// I and S, in the ring of the spec). `dropped` lists the prescribed stage
/// ideals that no pretty clean filtration of S/I passes through.
struct StagedFiltration {
  PrimeFiltration filtration;
  std::vector<MonomialIdeal> boundaries;
  std::vector<MonomialIdeal> dropped;
};

namespace detail {

inline MonomialIdeal scale_ideal(const MonomialIdeal &I, const Monomial &m) {
  std::vector<Monomial> g;
  for (const auto &x : I.gens())
    g.push_back(x * m);
  return MonomialIdeal(I.nvars(), std::move(g));
}

/// Prescribed intermediate stage ideals of a reduced spec (a_1 >= 1,
/// b_1 = 0).
inline std::vector<MonomialIdeal> prescribed_stages(const LexSpec &s) {
  const auto n = s.n();
  auto c = classify(s);
  if (c.kind != SpecKind::Arbitrary || s.d() == 1)
    return {};
  const MonomialIdeal I = lexsegment_generators(s);
  if (depth_class(s) == DepthCase::Depth0)
    return {colon(I, Monomial::var(n, 1, s.a1()))};
  const int l = s.l();
  MonomialIdeal c1 = colon(I, Monomial::var(n, 1));
  if (s.a(l) == s.d() - 1 || s.q() == l)
    return {c1};
  return {c1, colon(c1, Monomial::var(n, l, s.d()))};
}

} // namespace detail

/// Pretty clean filtration of S/I for a lexsegment ideal, built through
/// prescribed intermediate ideals:
///  b_1 > 0:       filter S/(I : x_1^{b_1}), multiply witnesses by
///                 x_1^{b_1}, then climb (x_1^{b_1}) < ... < (x_1) < S;
///  a_1 = 0:       filter in K[x_{min(u)}..x_n] and embed;
///  depth 0:       I < (I : x_1^{a_1}) < S;
///  depth > 0 with u = x_1 x_l^{d-1} or q = l:  I < (I : x_1) < S;
///  depth > 0 otherwise:  I < (I : x_1) < (I : x_1) : x_l^d < S;
///  initial, final, full segment, d = 1: I < S.
/// The gaps are filled by depth-first search starting from the greedy
/// choice, with backtracking across stages. When the search proves that no
/// pretty clean filtration passes through every stage ideal, stage ideals
/// are dropped (fewest first) until one does; dropped ideals are
/// reported. Running out of `node_budget` throws internal_error naming the
/// stages.
inline StagedFiltration staged_filtration_report(const LexSpec &s,
                                                 std::size_t node_budget =
                                                     200000) {
  const auto n = s.n();
  if (s.b1() > 0) {
    Monomial x1b = Monomial::var(n, 1, s.b1());
    StagedFiltration inner{{MonomialIdeal::unit(n), {}}, {}, {}};
    if (s.d() > s.b1())
      inner = staged_filtration_report(
          LexSpec(n, s.d() - s.b1(), s.u() / x1b, s.v() / x1b), node_budget);
    StagedFiltration out;
    out.filtration = detail::lift_by_x1_power(s, inner.filtration);
    for (const auto &b : inner.boundaries)
      out.boundaries.push_back(detail::scale_ideal(b, x1b));
    out.boundaries.push_back(MonomialIdeal(n, {x1b}));
    for (const auto &b : inner.dropped)
      out.dropped.push_back(detail::scale_ideal(b, x1b));
    return out;
  }
  if (s.a1() == 0) {
    Reduction r = reduce_spec(s);
    auto inner = staged_filtration_report(*r.reduced, node_budget);
    StagedFiltration out;
    out.filtration = detail::embed_shifted(s, r.var_offset, inner.filtration);
    for (const auto &b : inner.boundaries)
      out.boundaries.push_back(pad_front(b, r.var_offset));
    for (const auto &b : inner.dropped)
      out.dropped.push_back(pad_front(b, r.var_offset));
    return out;
  }

  const MonomialIdeal I = lexsegment_generators(s);
  const MonomialIdeal S = MonomialIdeal::unit(n);
  auto stages = detail::prescribed_stages(s);
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const auto &below = k ? stages[k - 1] : I;
    if (!stages[k].contains(below))
      throw internal_error("stage ideal " + stages[k].to_string() +
                           " does not contain " + below.to_string());
  }

  // Subsets of the stage ideals, largest first; among equal sizes the one
  // keeping earlier stages comes first.
  const std::size_t k = stages.size();
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << k); ++m)
    masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a > b;
  });

  StagedFiltration out;
  out.filtration = PrimeFiltration{I, {}};
  out.boundaries = stages;
  for (unsigned m : masks) {
    std::vector<MonomialIdeal> targets;
    for (std::size_t i = 0; i < k; ++i)
      if (m & (1u << (k - 1 - i)))
        targets.push_back(stages[i]);
    targets.push_back(S);
    auto r = detail::extend_through(I, targets, out.filtration.steps,
                                    node_budget);
    if (r == detail::SearchOutcome::OutOfBudget) {
      std::string t;
      for (const auto &x : targets)
        t += " " + x.to_string();
      throw internal_error("search through stages" + t + " of " +
                           s.to_string() + " ran out of budget");
    }
    if (r == detail::SearchOutcome::Found) {
      for (std::size_t i = 0; i < k; ++i)
        if (!(m & (1u << (k - 1 - i))))
          out.dropped.push_back(stages[i]);
      return out;
    }
  }
  throw internal_error("S/I has no pretty clean filtration for " +
                       s.to_string());
}

inline PrimeFiltration staged_filtration(const LexSpec &s,
                                         std::size_t node_budget = 200000) {
  return staged_filtration_report(s, node_budget).filtration;
}

struct StanleySpace {
  Monomial witness;
  std::vector<int> free_vars;

  friend bool operator==(const StanleySpace &, const StanleySpace &) = default;
};

/// S/I as the direct sum of the spaces witness * K[free_vars].
struct StanleyDecomposition {
  std::size_t n = 0;
  std::vector<StanleySpace> spaces;
};

inline StanleyDecomposition stanley_decomposition(const PrimeFiltration &F) {
  StanleyDecomposition D{F.base.nvars(), {}};
  for (const auto &st : F.steps)
    D.spaces.push_back({st.witness, st.prime.complement()});
  return D;
}

/// min |free_vars|; the decomposition's Stanley depth.
inline int sdepth_lower_bound(const StanleyDecomposition &D) {
  if (D.spaces.empty())
    throw std::domain_error("empty Stanley decomposition");
  std::size_t best = D.n;
  for (const auto &sp : D.spaces)
    best = std::min(best, sp.free_vars.size());
  return static_cast<int>(best);
}

struct CoverReport {
  std::vector<Monomial> misses;
  std::vector<Monomial> double_covers;
  std::vector<Monomial> covered_in_ideal;
  std::size_t standard_monomials = 0;

  bool passed() const noexcept {
    return misses.empty() && double_covers.empty() && covered_in_ideal.empty();
  }
};

inline bool in_space(const StanleySpace &sp, const Monomial &m) {
  if (!sp.witness.divides(m))
    return false;
  Monomial rest = m / sp.witness;
  for (int v : rest.supp())
    if (!std::binary_search(sp.free_vars.begin(), sp.free_vars.end(), v))
      return false;
  return true;
}

/// Every monomial of degree <= degree_bound outside I must lie in exactly
/// one space; monomials of I in none.
inline CoverReport disjoint_cover_check(const MonomialIdeal &I,
                                        const StanleyDecomposition &D,
                                        int degree_bound) {
  CoverReport r;
  for (const auto &m : enumerate_up_to_degree(I.nvars(), degree_bound)) {
    std::size_t hits = 0;
    for (const auto &sp : D.spaces)
      hits += in_space(sp, m) ? 1 : 0;
    if (I.contains(m)) {
      if (hits)
        r.covered_in_ideal.push_back(m);
      continue;
    }
    ++r.standard_monomials;
    if (hits == 0)
      r.misses.push_back(m);
    else if (hits > 1)
      r.double_covers.push_back(m);
  }
  return r;
}

inline int max_witness_degree(const PrimeFiltration &F) {
  int d = 0;
  for (const auto &st : F.steps)
    d = std::max(d, st.witness.degree());
  return d;
}

} // namespace lexseg
