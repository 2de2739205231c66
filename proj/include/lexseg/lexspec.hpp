#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace lexseg {

/// The data (n, d, u, v) of the lexsegment ideal I = (L(u, v)), where
/// L(u, v) = { w of degree d : u >=lex w >=lex v }.
class LexSpec {
public:
  LexSpec(std::size_t n, int d, Monomial u, Monomial v)
      : n_(n), d_(d), u_(std::move(u)), v_(std::move(v)) {
    if (n_ == 0)
      throw spec_error("lexsegment needs n >= 1");
    if (d_ < 1)
      throw spec_error("lexsegment needs d >= 1");
    if (u_.nvars() != n_ || v_.nvars() != n_)
      throw spec_error("u and v must have " + std::to_string(n_) +
                       " variables");
    if (u_.degree() != d_ || v_.degree() != d_)
      throw spec_error("u = " + u_.to_string() + " and v = " +
                       v_.to_string() + " must both have degree " +
                       std::to_string(d_));
    if (u_ < v_)
      throw spec_error("u = " + u_.to_string() + " is lex-smaller than v = " +
                       v_.to_string());
  }

  std::size_t n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  const Monomial &u() const noexcept { return u_; }
  const Monomial &v() const noexcept { return v_; }

  int a1() const { return u_.deg(1); }
  int b1() const { return v_.deg(1); }
  int a(int i) const { return u_.deg(i); }
  int b(int i) const { return v_.deg(i); }

  /// min(v).
  int q() const { return v_.min_var(); }

  /// min(u / x_1^{a_1}); needs x_1 | u and u != x_1^d.
  int l() const {
    if (a1() < 1 || a1() == d_)
      throw spec_error("l = min(u/x1^a1) needs x1 | u and u != x1^d");
    return (u_ / Monomial::var(n_, 1, a1())).min_var();
  }

  std::vector<int> supp_v() const { return v_.supp(); }

  bool is_x1_power(const Monomial &m) const { return m.deg(1) == d_; }
  bool is_xn_power(const Monomial &m) const {
    return m.deg(static_cast<int>(n_)) == d_;
  }

  std::string to_string() const {
    return "L(" + u_.to_string() + ", " + v_.to_string() +
           ") n=" + std::to_string(n_) + " d=" + std::to_string(d_);
  }

  friend bool operator==(const LexSpec &, const LexSpec &) = default;

private:
  std::size_t n_;
  int d_;
  Monomial u_;
  Monomial v_;
};

enum class SpecKind { Principal, FullSegment, Initial, Final, Arbitrary };

inline const char *to_string(SpecKind k) {
  switch (k) {
  case SpecKind::Principal:
    return "principal";
  case SpecKind::FullSegment:
    return "full";
  case SpecKind::Initial:
    return "initial";
  case SpecKind::Final:
    return "final";
  case SpecKind::Arbitrary:
    return "arbitrary";
  }
  return "?";
}

struct SpecClass {
  SpecKind kind;
  bool b1_positive;
  bool a1_zero;

  friend bool operator==(const SpecClass &, const SpecClass &) = default;
};

inline SpecClass classify(const LexSpec &s) {
  SpecKind k = SpecKind::Arbitrary;
  bool initial = s.is_x1_power(s.u());
  bool final = s.is_xn_power(s.v());
  if (s.u() == s.v())
    k = SpecKind::Principal;
  else if (initial && final)
    k = SpecKind::FullSegment;
  else if (initial)
    k = SpecKind::Initial;
  else if (final)
    k = SpecKind::Final;
  return {k, s.b1() > 0, s.a1() == 0};
}

/// Generators of (L(u, v)). Equigenerated, hence already minimal.
inline MonomialIdeal lexsegment_generators(const LexSpec &s) {
  std::vector<Monomial> g;
  for (auto &w : enumerate_degree(s.n(), s.d()))
    if (w <= s.u() && w >= s.v())
      g.push_back(std::move(w));
  return MonomialIdeal(s.n(), std::move(g));
}

/// One normalisation step.
///
/// With b_1 > 0 the ideal is replaced by (I : x_1^{b_1}), itself the
/// lexsegment (u/x_1^{b_1}, v/x_1^{b_1}) in degree d - b_1, and (x_1) is
/// recorded as an extra associated prime. With a_1 = 0 (hence b_1 = 0) the
/// spec is rewritten over x_{min(u)}..x_n. Otherwise nothing changes.
struct Reduction {
  /// Empty when d - b_1 = 0, i.e. u = v = x_1^d: the colon is the unit ideal.
  std::optional<LexSpec> reduced;
  /// Primes in the ring of the input spec.
  std::vector<PrimeIdeal> extra_primes;
  /// Number of leading variables dropped by re-indexing.
  std::size_t var_offset = 0;

  bool changed(const LexSpec &from) const {
    return !reduced || var_offset != 0 || !extra_primes.empty() ||
           !(*reduced == from);
  }
};

inline Reduction reduce_spec(const LexSpec &s) {
  Reduction r;
  if (s.b1() > 0) {
    int b1 = s.b1();
    r.extra_primes.push_back(PrimeIdeal(s.n(), {1}));
    if (s.d() == b1)
      return r;
    Monomial x1b = Monomial::var(s.n(), 1, b1);
    r.reduced.emplace(s.n(), s.d() - b1, s.u() / x1b, s.v() / x1b);
    return r;
  }
  if (s.a1() == 0) {
    auto off = static_cast<std::size_t>(s.u().min_var() - 1);
    r.var_offset = off;
    r.reduced.emplace(s.n() - off, s.d(), s.u().drop_front(off),
                      s.v().drop_front(off));
    return r;
  }
  r.reduced = s;
  return r;
}

/// The result of applying reduce_spec until a_1 >= 1 and b_1 = 0.
struct NormalForm {
  /// Spec over x_{offset+1}..x_n, or empty when the colon became the unit
  /// ideal.
  std::optional<LexSpec> working;
  /// Primes picked up along the way, in the original ring.
  std::vector<PrimeIdeal> extra_primes;
  std::size_t var_offset = 0;
};

inline NormalForm normalize_spec(const LexSpec &s) {
  NormalForm nf;
  std::optional<LexSpec> cur = s;
  for (;;) {
    Reduction r = reduce_spec(*cur);
    for (const auto &p : r.extra_primes)
      nf.extra_primes.push_back(p.shifted(nf.var_offset));
    nf.var_offset += r.var_offset;
    if (!r.reduced || !r.changed(*cur)) {
      nf.working = r.reduced;
      return nf;
    }
    cur = r.reduced;
  }
}

} // namespace lexseg
