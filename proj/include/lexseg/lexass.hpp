#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "depth.hpp"
#include "lexspec.hpp"
#include "oracle.hpp"

namespace lexseg {

namespace detail {

/// (x_2, ..., x_j, x_t, ..., x_n), defined only for 2 <= j <= t-2, t <= n.
inline void insert_p_jt(std::set<PrimeIdeal> &out, std::size_t n, int j,
                        int t) {
  if (j < 2 || j > t - 2 || t > static_cast<int>(n))
    return;
  std::vector<int> vars;
  for (int i = 2; i <= j; ++i)
    vars.push_back(i);
  for (int i = t; i <= static_cast<int>(n); ++i)
    vars.push_back(i);
  out.insert(PrimeIdeal(n, std::move(vars)));
}

/// { (x_1, ..., x_j) : j in supp(v), j != n }.
inline std::set<PrimeIdeal> initial_chain(const LexSpec &s) {
  std::set<PrimeIdeal> out;
  for (int j : s.supp_v())
    if (j != static_cast<int>(s.n()))
      out.insert(PrimeIdeal::range(s.n(), 1, j));
  return out;
}

} // namespace detail

/// The primes (x_1, ..., x_j), j in supp(v) \ {n}, each with the witness
/// w = (v / x_j) x_n^{d - b_n}. Every witness is checked before returning.
inline std::vector<std::pair<PrimeIdeal, Monomial>>
supp_witness_primes(const LexSpec &s) {
  if (s.a1() < 1 || s.b1() > 0 || s.is_xn_power(s.v()))
    throw spec_error("supp_witness_primes needs x1 | u, x1 not dividing v and "
                     "v != xn^d, got " +
                     s.to_string());
  const auto n = s.n();
  const int nn = static_cast<int>(n);
  auto I = lexsegment_generators(s);
  std::vector<std::pair<PrimeIdeal, Monomial>> out;
  for (int j : s.supp_v()) {
    if (j == nn)
      continue;
    Monomial w = s.v() / Monomial::var(n, j) *
                 Monomial::var(n, nn, s.d() - s.b(nn));
    PrimeIdeal P = PrimeIdeal::range(n, 1, j);
    if (!is_witness(I, P, w))
      throw internal_error(w.to_string() + " does not witness " +
                           P.to_string() + " for " + s.to_string());
    out.emplace_back(std::move(P), std::move(w));
  }
  return out;
}

/// Initial lexsegment L(x_1^d, v) with x_1 not dividing v and d >= 2:
/// Ass = { (x_1, ..., x_j) : j in supp(v) u {n} }.
inline std::set<PrimeIdeal> ass_initial(const LexSpec &s) {
  auto c = classify(s);
  if (c.kind != SpecKind::Initial || c.b1_positive || s.d() < 2)
    throw spec_error("ass_initial needs a reduced initial lexsegment with "
                     "d >= 2, got " +
                     s.to_string());
  auto out = detail::initial_chain(s);
  out.insert(PrimeIdeal::maximal(s.n()));
  return out;
}

/// Final lexsegment L(u, x_n^d) with x_1 | u, u != x_1^d:
/// Ass = { m, (x_2, ..., x_n) }.
inline std::set<PrimeIdeal> ass_final(const LexSpec &s) {
  auto c = classify(s);
  if (c.kind != SpecKind::Final || c.a1_zero)
    throw spec_error("ass_final needs a final lexsegment with x1 | u and "
                     "u != x1^d, got " +
                     s.to_string());
  return {PrimeIdeal::maximal(s.n()),
          PrimeIdeal::range(s.n(), 2, static_cast<int>(s.n()))};
}

/// Depth-zero arbitrary lexsegment:
/// Ass = { (x_1..x_j) : j in supp(v) u {n} } u { (x_2..x_n) }.
inline std::set<PrimeIdeal> ass_depth0(const LexSpec &s) {
  if (depth_class(s) != DepthCase::Depth0)
    throw spec_error("ass_depth0 needs depth(S/I) = 0, got " + s.to_string());
  auto out = detail::initial_chain(s);
  out.insert(PrimeIdeal::maximal(s.n()));
  out.insert(PrimeIdeal::range(s.n(), 2, static_cast<int>(s.n())));
  return out;
}

/// Positive-depth arbitrary lexsegment, u = x_1 x_l^{a_l} ... x_n^{a_n}.
inline std::set<PrimeIdeal> ass_depth_pos(const LexSpec &s, DepthCase dc) {
  DepthCase actual = depth_class(s);
  if (actual == DepthCase::Depth0 || actual != dc)
    throw spec_error(std::string("ass_depth_pos called with case ") +
                     to_string(dc) + " but " + s.to_string() + " is " +
                     to_string(actual));
  const auto n = s.n();
  const int l = s.l();
  auto out = detail::initial_chain(s);
  const bool one = level(dc) == DepthLevel::One;
  if (one)
    out.insert(PrimeIdeal::range(n, 2, static_cast<int>(n)));
  for (int j : s.supp_v()) {
    if (!one || j <= l - 2)
      detail::insert_p_jt(out, n, j, l);
    if (subcase_a(dc) && (!one || j <= l - 1))
      detail::insert_p_jt(out, n, j, l + 1);
  }
  return out;
}

/// Ass(S/I) for any lexsegment ideal, in the original ring.
///
/// Normalises to a_1 >= 1, b_1 = 0 (collecting (x_1) for each colon by a
/// power of x_1 and shifting for dropped leading variables), then uses the
/// closed form matching the shape of the working spec.
inline std::set<PrimeIdeal> associated_primes_lexsegment(const LexSpec &spec) {
  auto nf = normalize_spec(spec);
  std::set<PrimeIdeal> out(nf.extra_primes.begin(), nf.extra_primes.end());
  if (!nf.working)
    return out;
  const LexSpec &s = *nf.working;
  std::set<PrimeIdeal> local;
  auto c = classify(s);
  if (c.kind == SpecKind::Principal) {
    for (int i : s.u().supp())
      local.insert(PrimeIdeal(s.n(), {i}));
  } else if (c.kind == SpecKind::FullSegment) {
    local.insert(PrimeIdeal::maximal(s.n()));
  } else if (s.d() == 1) {
    // L(x_1, x_j) = {x_1, ..., x_j}: the ideal is prime.
    local.insert(PrimeIdeal::range(s.n(), 1, s.v().min_var()));
  } else if (c.kind == SpecKind::Initial) {
    local = ass_initial(s);
  } else if (c.kind == SpecKind::Final) {
    local = ass_final(s);
  } else {
    DepthCase dc = depth_class(s);
    local = dc == DepthCase::Depth0 ? ass_depth0(s) : ass_depth_pos(s, dc);
  }
  for (const auto &p : local)
    out.insert(p.shifted(nf.var_offset));
  return out;
}

} // namespace lexseg
