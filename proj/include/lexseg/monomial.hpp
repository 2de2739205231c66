#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lexseg {

/// A monomial x_1^{e_1} ... x_n^{e_n} stored as its exponent vector.
///
/// Variables are addressed 1-based through deg(i), matching the usual
/// x_1 > x_2 > ... > x_n naming; exps() exposes the raw 0-based vector.
/// Ordering (operator<=>) is the lexicographic order on exponent vectors,
/// which restricts to the lex monomial order on each fixed degree.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0)
        throw std::invalid_argument("negative exponent in monomial");
  }
  Monomial(std::initializer_list<int> exps)
      : Monomial(std::vector<int>(exps)) {}

  static Monomial one(std::size_t n) { return Monomial(n); }

  /// x_i^e, with 1 <= i <= n.
  static Monomial var(std::size_t n, int i, int e = 1) {
    check_index(n, i);
    Monomial m(n);
    m.exps_[static_cast<std::size_t>(i - 1)] = e;
    return m;
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  const std::vector<int> &exps() const noexcept { return exps_; }

  /// Exponent of x_i (1-based).
  int deg(int i) const {
    check_index(nvars(), i);
    return exps_[static_cast<std::size_t>(i - 1)];
  }

  int degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](int e) { return e == 0; });
  }

  /// True for 1 and for x_i^e.
  bool is_pure_power() const noexcept {
    return std::count_if(exps_.begin(), exps_.end(),
                         [](int e) { return e > 0; }) <= 1;
  }

  /// Sorted 1-based indices of the variables dividing this monomial.
  std::vector<int> supp() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0)
        s.push_back(static_cast<int>(i + 1));
    return s;
  }

  /// Smallest index in supp, or 0 for the unit monomial.
  int min_var() const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0)
        return static_cast<int>(i + 1);
    return 0;
  }

  /// Largest index in supp, or 0 for the unit monomial.
  int max_var() const noexcept {
    for (std::size_t i = exps_.size(); i-- > 0;)
      if (exps_[i] > 0)
        return static_cast<int>(i + 1);
    return 0;
  }

  bool divides(const Monomial &other) const {
    check_same(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i])
        return false;
    return true;
  }

  Monomial operator*(const Monomial &other) const {
    check_same(*this, other);
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] += other.exps_[i];
    return r;
  }

  /// Exact quotient; the divisor must divide *this.
  Monomial operator/(const Monomial &divisor) const {
    if (!divisor.divides(*this))
      throw std::invalid_argument("monomial division is not exact");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] -= divisor.exps_[i];
    return r;
  }

  /// Copy with the exponents of the first `offset` variables dropped.
  Monomial drop_front(std::size_t offset) const {
    return Monomial(std::vector<int>(exps_.begin() + static_cast<long>(offset),
                                     exps_.end()));
  }

  /// Copy living in a ring with `offset` extra leading variables.
  Monomial pad_front(std::size_t offset) const {
    std::vector<int> e(offset, 0);
    e.insert(e.end(), exps_.begin(), exps_.end());
    return Monomial(std::move(e));
  }

  std::string to_string() const {
    if (is_one())
      return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0)
        continue;
      if (!first)
        os << '*';
      first = false;
      os << 'x' << (i + 1);
      if (exps_[i] > 1)
        os << '^' << exps_[i];
    }
    return os.str();
  }

  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend std::strong_ordering operator<=>(const Monomial &a,
                                          const Monomial &b) {
    return a.exps_ <=> b.exps_;
  }

  friend Monomial gcd(const Monomial &a, const Monomial &b) {
    check_same(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i)
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial &a, const Monomial &b) {
    check_same(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i)
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend std::ostream &operator<<(std::ostream &os, const Monomial &m) {
    return os << m.to_string();
  }

  static void check_same(const Monomial &a, const Monomial &b) {
    if (a.nvars() != b.nvars())
      throw dimension_error("monomials over " + std::to_string(a.nvars()) +
                            " and " + std::to_string(b.nvars()) +
                            " variables");
  }

private:
  static void check_index(std::size_t n, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw std::out_of_range("variable index " + std::to_string(i) +
                              " outside 1.." + std::to_string(n));
  }

  std::vector<int> exps_;
};

/// Lex comparison with x_1 > ... > x_n: the first differing exponent
/// decides, larger exponent on the earlier variable wins.
inline std::strong_ordering lex_compare(const Monomial &a, const Monomial &b) {
  Monomial::check_same(a, b);
  return a <=> b;
}

namespace detail {

/// Returns false once the visitor asked to stop.
inline bool enumerate_box_rec(std::vector<int> &cur, std::size_t pos,
                              std::span<const int> bound, int remaining,
                              bool fixed_degree,
                              const std::function<bool(const Monomial &)> &f) {
  if (pos == cur.size()) {
    if (!fixed_degree || remaining == 0)
      return f(Monomial(cur));
    return true;
  }
  int hi = bound.empty() ? remaining : bound[pos];
  if (fixed_degree)
    hi = std::min(hi, remaining);
  int lo = 0;
  if (fixed_degree && pos + 1 == cur.size())
    lo = remaining;
  for (int e = hi; e >= lo; --e) {
    cur[pos] = e;
    if (!enumerate_box_rec(cur, pos + 1, bound, remaining - e, fixed_degree, f))
      return false;
  }
  cur[pos] = 0;
  return true;
}

} // namespace detail

/// Visit every monomial with exponents bounded componentwise by `bound`,
/// in lex-descending order, until the visitor returns false.
inline void for_each_in_box(std::span<const int> bound,
                            const std::function<bool(const Monomial &)> &f) {
  std::vector<int> cur(bound.size(), 0);
  detail::enumerate_box_rec(cur, 0, bound, 0, false, f);
}

/// All monomials of degree d in n variables, lex-descending: x_1^d first,
/// x_n^d last.
inline std::vector<Monomial> enumerate_degree(std::size_t n, int d) {
  if (n == 0)
    throw std::invalid_argument("enumerate_degree needs n >= 1");
  if (d < 0)
    throw std::invalid_argument("enumerate_degree needs d >= 0");
  std::vector<Monomial> out;
  std::vector<int> cur(n, 0);
  detail::enumerate_box_rec(cur, 0, {}, d, true,
                            [&](const Monomial &m) {
                              out.push_back(m);
                              return true;
                            });
  return out;
}

/// All monomials of degree <= max_degree in n variables.
inline std::vector<Monomial> enumerate_up_to_degree(std::size_t n,
                                                    int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto layer = enumerate_degree(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

} // namespace lexseg

template <> struct std::hash<lexseg::Monomial> {
  std::size_t operator()(const lexseg::Monomial &m) const noexcept {
    std::size_t h = m.nvars();
    for (int e : m.exps())
      h = h * 1000003u ^ static_cast<std::size_t>(e);
    return h;
  }
};
