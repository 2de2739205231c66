#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace lexseg {

/// A monomial ideal in K[x_1..x_n], kept in canonical form: minimal
/// generators sorted lex-descending. Equal ideals compare equal.
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
    for (const auto &g : gens)
      if (g.nvars() != n)
        throw dimension_error("generator " + g.to_string() + " has " +
                              std::to_string(g.nvars()) +
                              " variables, ideal has " + std::to_string(n));
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) {
    return MonomialIdeal(n, {Monomial::one(n)});
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Monomial> &gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_one();
  }

  /// Generated by variables only (and nonzero, proper).
  bool is_prime() const noexcept {
    return !gens_.empty() &&
           std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial &g) { return g.degree() == 1; });
  }

  bool contains(const Monomial &m) const {
    if (m.nvars() != n_)
      throw dimension_error("membership test across rings");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial &g) { return g.divides(m); });
  }

  /// J subset of *this.
  bool contains(const MonomialIdeal &other) const {
    check_same(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial &g) { return contains(g); });
  }

  /// Componentwise maximum of the generator exponents.
  std::vector<int> max_exponents() const {
    std::vector<int> e(n_, 0);
    for (const auto &g : gens_)
      for (std::size_t i = 0; i < n_; ++i)
        e[i] = std::max(e[i], g.exps()[i]);
    return e;
  }

  int max_degree() const noexcept {
    int d = 0;
    for (const auto &g : gens_)
      d = std::max(d, g.degree());
    return d;
  }

  std::string to_string() const {
    if (is_zero())
      return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i)
        s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) =
      default;
  friend auto operator<=>(const MonomialIdeal &a, const MonomialIdeal &b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    return a.gens_ <=> b.gens_;
  }

  friend std::ostream &operator<<(std::ostream &os, const MonomialIdeal &I) {
    return os << I.to_string();
  }

  static void check_same(const MonomialIdeal &a, const MonomialIdeal &b) {
    if (a.n_ != b.n_)
      throw dimension_error("ideals over " + std::to_string(a.n_) + " and " +
                            std::to_string(b.n_) + " variables");
  }

private:
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial &a, const Monomial &b) {
                if (a.degree() != b.degree())
                  return a.degree() < b.degree();
                return a > b;
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto &g : gens) {
      bool redundant = std::any_of(kept.begin(), kept.end(),
                                   [&](const Monomial &k) {
                                     return k.divides(g);
                                   });
      if (!redundant)
        kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), std::greater<>());
    return kept;
  }

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// A monomial prime ideal (x_i : i in vars). Every associated prime of a
/// monomial ideal has this shape.
class PrimeIdeal {
public:
  PrimeIdeal() = default;
  PrimeIdeal(std::size_t n, std::vector<int> vars) : n_(n), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    for (int v : vars_)
      if (v < 1 || static_cast<std::size_t>(v) > n_)
        throw std::out_of_range("prime variable " + std::to_string(v) +
                                " outside 1.." + std::to_string(n_));
  }

  /// (x_first, ..., x_last); empty when first > last.
  static PrimeIdeal range(std::size_t n, int first, int last) {
    std::vector<int> v;
    for (int i = first; i <= last; ++i)
      v.push_back(i);
    return PrimeIdeal(n, std::move(v));
  }

  static PrimeIdeal maximal(std::size_t n) {
    return range(n, 1, static_cast<int>(n));
  }

  /// Radical of a prime monomial ideal; throws if the ideal is not prime.
  static PrimeIdeal from_ideal(const MonomialIdeal &I) {
    if (!I.is_prime())
      throw std::invalid_argument(I.to_string() + " is not a prime ideal");
    std::vector<int> v;
    for (const auto &g : I.gens())
      v.push_back(g.min_var());
    return PrimeIdeal(I.nvars(), std::move(v));
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<int> &vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool has(int i) const {
    return std::binary_search(vars_.begin(), vars_.end(), i);
  }

  /// Variables not in the prime.
  std::vector<int> complement() const {
    std::vector<int> c;
    for (int i = 1; i <= static_cast<int>(n_); ++i)
      if (!has(i))
        c.push_back(i);
    return c;
  }

  bool subset_of(const PrimeIdeal &other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(),
                         vars_.begin(), vars_.end());
  }
  bool proper_subset_of(const PrimeIdeal &other) const {
    return size() < other.size() && subset_of(other);
  }

  MonomialIdeal to_ideal() const {
    std::vector<Monomial> g;
    for (int v : vars_)
      g.push_back(Monomial::var(n_, v));
    return MonomialIdeal(n_, std::move(g));
  }

  /// Same variables, renumbered into a ring with `offset` extra leading
  /// variables.
  PrimeIdeal shifted(std::size_t offset) const {
    std::vector<int> v = vars_;
    for (int &x : v)
      x += static_cast<int>(offset);
    return PrimeIdeal(n_ + offset, std::move(v));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i)
        s += ",";
      s += "x" + std::to_string(vars_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const PrimeIdeal &, const PrimeIdeal &) = default;
  friend auto operator<=>(const PrimeIdeal &a, const PrimeIdeal &b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    return a.vars_ <=> b.vars_;
  }

  friend std::ostream &operator<<(std::ostream &os, const PrimeIdeal &P) {
    return os << P.to_string();
  }

private:
  std::size_t n_ = 0;
  std::vector<int> vars_;
};

inline bool membership(const Monomial &m, const MonomialIdeal &I) {
  return I.contains(m);
}

/// (I : w) = { m : m*w in I }, generated by g / gcd(g, w).
inline MonomialIdeal colon(const MonomialIdeal &I, const Monomial &w) {
  if (w.nvars() != I.nvars())
    throw dimension_error("colon across rings");
  std::vector<Monomial> g;
  g.reserve(I.size());
  for (const auto &gen : I.gens())
    g.push_back(gen / gcd(gen, w));
  return MonomialIdeal(I.nvars(), std::move(g));
}

inline MonomialIdeal ideal_sum(const MonomialIdeal &I, const MonomialIdeal &J) {
  MonomialIdeal::check_same(I, J);
  std::vector<Monomial> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.nvars(), std::move(g));
}

inline MonomialIdeal ideal_sum(const MonomialIdeal &I, const Monomial &m) {
  return ideal_sum(I, MonomialIdeal(I.nvars(), {m}));
}

inline MonomialIdeal intersect(const MonomialIdeal &I, const MonomialIdeal &J) {
  MonomialIdeal::check_same(I, J);
  std::vector<Monomial> g;
  g.reserve(I.size() * J.size());
  for (const auto &a : I.gens())
    for (const auto &b : J.gens())
      g.push_back(lcm(a, b));
  return MonomialIdeal(I.nvars(), std::move(g));
}

/// Same generators, viewed in a ring with `offset` extra leading variables.
inline MonomialIdeal pad_front(const MonomialIdeal &I, std::size_t offset) {
  std::vector<Monomial> g;
  for (const auto &m : I.gens())
    g.push_back(m.pad_front(offset));
  return MonomialIdeal(I.nvars() + offset, std::move(g));
}

} // namespace lexseg
