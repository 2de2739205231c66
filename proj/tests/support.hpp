#pragma once

// Independent reference computations used by the tests. They work on raw
// exponent vectors and avoid the library's colon, decomposition and
// ordering code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lexseg/ideal.hpp"
#include "lexseg/lexspec.hpp"

namespace ref {

using Exps = std::vector<int>;

/// Lex with x1 > x2 > ...: true iff a > b.
inline bool lex_greater(const Exps &a, const Exps &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return a[i] > b[i];
  return false;
}

inline bool divides(const Exps &a, const Exps &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

inline bool member(const std::vector<Exps> &gens, const Exps &m) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Exps &g) { return divides(g, m); });
}

/// Every exponent vector with entries in [0, bound_i].
inline std::vector<Exps> box(const Exps &bound) {
  std::vector<Exps> out{Exps(bound.size(), 0)};
  for (std::size_t i = 0; i < bound.size(); ++i) {
    std::vector<Exps> next;
    for (const auto &e : out)
      for (int k = 0; k <= bound[i]; ++k) {
        auto f = e;
        f[i] = k;
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

/// Degree-d exponent vectors in n variables, any order.
inline std::vector<Exps> degree_layer(std::size_t n, int d) {
  std::vector<Exps> out;
  for (auto &e : box(Exps(n, d))) {
    int s = 0;
    for (int x : e)
      s += x;
    if (s == d)
      out.push_back(e);
  }
  return out;
}

/// L(u, v) by direct filtering with the local lex comparison.
inline std::vector<Exps> lexsegment(std::size_t n, int d, const Exps &u,
                                    const Exps &v) {
  std::vector<Exps> out;
  for (auto &w : degree_layer(n, d))
    if (!lex_greater(w, u) && !lex_greater(v, w))
      out.push_back(w);
  return out;
}

inline std::vector<Exps> gens_of(const lexseg::MonomialIdeal &I) {
  std::vector<Exps> g;
  for (const auto &m : I.gens())
    g.push_back(m.exps());
  return g;
}

/// Ass(S/I) by brute force: for each w outside I in the box of generator
/// exponents, P_w = { i : x_i w in I } is (I : w) exactly when no monomial
/// in the remaining variables pushes w into I.
inline std::set<std::vector<int>> brute_ass(const std::vector<Exps> &gens,
                                            std::size_t n) {
  Exps bound(n, 0);
  int big = 1;
  for (const auto &g : gens)
    for (std::size_t i = 0; i < n; ++i) {
      bound[i] = std::max(bound[i], g[i]);
      big = std::max(big, g[i] + 1);
    }
  std::set<std::vector<int>> out;
  for (const auto &w : box(bound)) {
    if (member(gens, w))
      continue;
    std::vector<int> P;
    Exps far = w;
    for (std::size_t i = 0; i < n; ++i) {
      Exps wi = w;
      ++wi[i];
      if (member(gens, wi))
        P.push_back(static_cast<int>(i + 1));
      else
        far[i] += big;
    }
    if (!member(gens, far))
      out.insert(P);
  }
  return out;
}

inline std::set<std::vector<int>>
as_var_sets(const std::set<lexseg::PrimeIdeal> &s) {
  std::set<std::vector<int>> out;
  for (const auto &p : s)
    out.insert(p.vars());
  return out;
}

/// Random monomial ideal: n <= max_n variables, 1..max_gens generators with
/// exponents <= max_exp, never the unit ideal.
inline lexseg::MonomialIdeal random_ideal(std::mt19937 &rng, int max_n,
                                          int max_gens, int max_exp) {
  std::uniform_int_distribution<int> dn(1, max_n), dg(1, max_gens),
      de(0, max_exp);
  auto n = static_cast<std::size_t>(dn(rng));
  int k = dg(rng);
  std::vector<lexseg::Monomial> g;
  while (static_cast<int>(g.size()) < k) {
    Exps e(n);
    for (auto &x : e)
      x = de(rng);
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }))
      continue;
    g.emplace_back(e);
  }
  return lexseg::MonomialIdeal(n, std::move(g));
}

/// Every lexsegment spec with n and d in the given ranges.
inline std::vector<lexseg::LexSpec> all_specs(int n_lo, int n_hi, int d_lo,
                                              int d_hi) {
  std::vector<lexseg::LexSpec> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int d = d_lo; d <= d_hi; ++d) {
      auto M = lexseg::enumerate_degree(static_cast<std::size_t>(n), d);
      for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = i; j < M.size(); ++j)
          out.emplace_back(static_cast<std::size_t>(n), d, M[i], M[j]);
    }
  return out;
}

inline lexseg::Monomial mono(std::initializer_list<int> e) {
  return lexseg::Monomial(e);
}

inline lexseg::MonomialIdeal ideal(std::size_t n,
                                   std::initializer_list<Exps> gens) {
  std::vector<lexseg::Monomial> g;
  for (const auto &e : gens)
    g.emplace_back(e);
  return lexseg::MonomialIdeal(n, std::move(g));
}

inline lexseg::PrimeIdeal prime(std::size_t n, std::vector<int> vars) {
  return lexseg::PrimeIdeal(n, std::move(vars));
}

} // namespace ref
