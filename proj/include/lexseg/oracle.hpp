#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ideal.hpp"

namespace lexseg {

/// An irreducible monomial ideal (x_i^{e_i} : i in keys).
class IrreducibleIdeal {
public:
  IrreducibleIdeal() = default;

  /// `powers` holds (variable, exponent) pairs with exponent >= 1.
  IrreducibleIdeal(std::size_t n, std::vector<std::pair<int, int>> powers)
      : n_(n), powers_(std::move(powers)) {
    std::sort(powers_.begin(), powers_.end());
    for (std::size_t i = 0; i < powers_.size(); ++i) {
      auto [v, e] = powers_[i];
      if (v < 1 || static_cast<std::size_t>(v) > n_ || e < 1)
        throw std::invalid_argument("bad irreducible component power");
      if (i && powers_[i - 1].first == v)
        throw std::invalid_argument("repeated variable in irreducible ideal");
    }
  }

  /// Reads off the pure powers of an ideal whose generators are all pure
  /// powers.
  static IrreducibleIdeal from_ideal(const MonomialIdeal &I) {
    std::vector<std::pair<int, int>> p;
    for (const auto &g : I.gens()) {
      if (!g.is_pure_power() || g.is_one())
        throw std::invalid_argument(I.to_string() + " is not irreducible");
      p.emplace_back(g.min_var(), g.degree());
    }
    return IrreducibleIdeal(I.nvars(), std::move(p));
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<std::pair<int, int>> &powers() const noexcept {
    return powers_;
  }

  /// Exponent of x_i in this component, 0 when x_i does not occur.
  int exponent(int i) const {
    for (auto [v, e] : powers_)
      if (v == i)
        return e;
    return 0;
  }

  PrimeIdeal radical() const {
    std::vector<int> v;
    for (auto [var, e] : powers_)
      v.push_back(var);
    return PrimeIdeal(n_, std::move(v));
  }

  MonomialIdeal to_ideal() const {
    std::vector<Monomial> g;
    for (auto [v, e] : powers_)
      g.push_back(Monomial::var(n_, v, e));
    return MonomialIdeal(n_, std::move(g));
  }

  bool contains(const Monomial &m) const {
    for (auto [v, e] : powers_)
      if (m.deg(v) >= e)
        return true;
    return false;
  }

  /// this subset of other.
  bool subset_of(const IrreducibleIdeal &other) const {
    for (auto [v, e] : powers_) {
      int oe = other.exponent(v);
      if (oe == 0 || oe > e)
        return false;
    }
    return true;
  }

  std::string to_string() const { return to_ideal().to_string(); }

  friend bool operator==(const IrreducibleIdeal &,
                         const IrreducibleIdeal &) = default;
  friend auto operator<=>(const IrreducibleIdeal &a,
                          const IrreducibleIdeal &b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    return a.powers_ <=> b.powers_;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::pair<int, int>> powers_;
};

namespace detail {

/// Keep only the inclusion-minimal components; the intersection is
/// unchanged and the result is irredundant.
inline std::vector<IrreducibleIdeal>
minimal_components(std::vector<IrreducibleIdeal> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<IrreducibleIdeal> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      redundant = j != i && comps[j].subset_of(comps[i]);
    if (!redundant)
      out.push_back(comps[i]);
  }
  return out;
}

using DecompositionMemo = std::map<MonomialIdeal, std::vector<IrreducibleIdeal>>;

inline std::vector<IrreducibleIdeal> decompose_rec(const MonomialIdeal &I,
                                                   DecompositionMemo &memo) {
  if (auto it = memo.find(I); it != memo.end())
    return it->second;

  // Generators are lex-descending, so the first impure one is the
  // lex-greatest.
  auto pivot = std::find_if(I.gens().begin(), I.gens().end(),
                            [](const Monomial &g) { return !g.is_pure_power(); });
  std::vector<IrreducibleIdeal> result;
  if (pivot == I.gens().end()) {
    result.push_back(IrreducibleIdeal::from_ideal(I));
  } else {
    int i = pivot->max_var();
    Monomial power = Monomial::var(I.nvars(), i, pivot->deg(i));
    Monomial rest = *pivot / power;
    auto left = decompose_rec(ideal_sum(I, power), memo);
    auto right = decompose_rec(ideal_sum(I, rest), memo);
    left.insert(left.end(), right.begin(), right.end());
    result = minimal_components(std::move(left));
  }
  memo.emplace(I, result);
  return result;
}

inline void check_proper_nonzero(const MonomialIdeal &I, const char *what) {
  if (I.is_zero() || I.is_unit())
    throw std::domain_error(std::string(what) +
                            " needs a proper nonzero ideal, got " +
                            I.to_string());
}

} // namespace detail

/// The irredundant irreducible decomposition of I, sorted.
///
/// A minimal generator g = x_i^a * m, with x_i the last variable of g and
/// m != 1, splits I = (I + x_i^a) cap (I + m); recursion stops when every
/// generator is a pure power.
inline std::vector<IrreducibleIdeal>
irreducible_decomposition(const MonomialIdeal &I) {
  detail::check_proper_nonzero(I, "irreducible_decomposition");
  detail::DecompositionMemo memo;
  return detail::decompose_rec(I, memo);
}

/// Intersection of the given components (unit ideal for an empty list).
inline MonomialIdeal intersect_all(std::size_t n,
                                   const std::vector<IrreducibleIdeal> &comps) {
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const auto &c : comps)
    acc = intersect(acc, c.to_ideal());
  return acc;
}

/// Componentwise maximum of the component exponents. Every witness
/// monomial can be capped to this box without changing its colon.
inline std::vector<int>
witness_bound(std::size_t n, const std::vector<IrreducibleIdeal> &comps) {
  std::vector<int> e(n, 0);
  for (const auto &c : comps)
    for (auto [v, x] : c.powers())
      e[static_cast<std::size_t>(v - 1)] =
          std::max(e[static_cast<std::size_t>(v - 1)], x);
  return e;
}

/// True iff w is not in I and (I : w) is exactly P.
inline bool is_witness(const MonomialIdeal &I, const PrimeIdeal &P,
                       const Monomial &w) {
  if (I.contains(w))
    return false;
  return colon(I, w) == P.to_ideal();
}

/// Lex-greatest w in the box `bound` with w not in I and (I : w) = P.
inline std::optional<Monomial> witness_search_in_box(const MonomialIdeal &I,
                                                     const PrimeIdeal &P,
                                                     std::span<const int> bound) {
  std::optional<Monomial> found;
  for_each_in_box(bound, [&](const Monomial &w) {
    if (!is_witness(I, P, w))
      return true;
    found = w;
    return false;
  });
  return found;
}

inline std::optional<Monomial> witness_search(const MonomialIdeal &I,
                                              const PrimeIdeal &P) {
  if (P.nvars() != I.nvars())
    throw dimension_error("witness_search across rings");
  detail::check_proper_nonzero(I, "witness_search");
  auto bound = witness_bound(I.nvars(), irreducible_decomposition(I));
  return witness_search_in_box(I, P, bound);
}

struct AssResult {
  std::set<PrimeIdeal> primes;
  std::map<PrimeIdeal, Monomial> witnesses;
};

/// Ass(S/I) as the radicals of the irredundant irreducible components,
/// each confirmed by an explicit witness monomial.
inline AssResult associated_primes_oracle(const MonomialIdeal &I) {
  auto comps = irreducible_decomposition(I);
  AssResult r;
  for (const auto &c : comps)
    r.primes.insert(c.radical());
  auto bound = witness_bound(I.nvars(), comps);
  for (const auto &p : r.primes) {
    auto w = witness_search_in_box(I, p, bound);
    if (!w)
      throw internal_error("no witness for " + p.to_string() + " in Ass of " +
                           I.to_string() + " within the component box");
    r.witnesses.emplace(p, *w);
  }
  return r;
}

inline std::set<PrimeIdeal> minimal_primes(const MonomialIdeal &I) {
  auto ass = associated_primes_oracle(I).primes;
  std::set<PrimeIdeal> out;
  for (const auto &p : ass) {
    bool minimal = std::none_of(ass.begin(), ass.end(), [&](const auto &o) {
      return o.proper_subset_of(p);
    });
    if (minimal)
      out.insert(p);
  }
  return out;
}

inline int krull_dim(const MonomialIdeal &I) {
  std::size_t smallest = I.nvars();
  for (const auto &p : minimal_primes(I))
    smallest = std::min(smallest, p.size());
  return static_cast<int>(I.nvars() - smallest);
}

/// Inclusion-maximal elements of a set of primes.
inline std::vector<PrimeIdeal> maximal_elements(const std::set<PrimeIdeal> &s) {
  std::vector<PrimeIdeal> out;
  for (const auto &p : s)
    if (std::none_of(s.begin(), s.end(),
                     [&](const auto &o) { return p.proper_subset_of(o); }))
      out.push_back(p);
  return out;
}

} // namespace lexseg
