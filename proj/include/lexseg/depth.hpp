#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lexspec.hpp"

namespace lexseg {

/// Depth of S/I for a reduced lexsegment that is neither initial nor
/// final, together with the a/b sub-case (a: a_l < d - 1, b: a_l = d - 1).
enum class DepthCase { Depth0, Depth1A, Depth1B, DepthGe2A, DepthGe2B };

enum class DepthLevel { Zero, One, AtLeastTwo };

inline DepthLevel level(DepthCase c) {
  switch (c) {
  case DepthCase::Depth0:
    return DepthLevel::Zero;
  case DepthCase::Depth1A:
  case DepthCase::Depth1B:
    return DepthLevel::One;
  default:
    return DepthLevel::AtLeastTwo;
  }
}

inline bool subcase_a(DepthCase c) {
  return c == DepthCase::Depth1A || c == DepthCase::DepthGe2A;
}

inline const char *to_string(DepthCase c) {
  switch (c) {
  case DepthCase::Depth0:
    return "depth0";
  case DepthCase::Depth1A:
    return "depth1-a";
  case DepthCase::Depth1B:
    return "depth1-b";
  case DepthCase::DepthGe2A:
    return "depth>=2-a";
  case DepthCase::DepthGe2B:
    return "depth>=2-b";
  }
  return "?";
}

/// Throws unless x_1 | u, x_1 does not divide v, and the spec is
/// neither principal, initial, final nor the full segment.
inline void require_reduced_arbitrary(const LexSpec &s, const char *who) {
  auto c = classify(s);
  if (c.kind != SpecKind::Arbitrary || c.a1_zero || c.b1_positive)
    throw spec_error(std::string(who) +
                     " needs a reduced arbitrary lexsegment (x1 | u, x1 "
                     "does not divide v, neither initial nor final), got " +
                     s.to_string());
}

/// Depth class from the lexsegment shape alone:
///  depth 0   iff x_n u >=lex x_1 v;
///  depth 1   iff v = x_2^{d-1} x_j with 2 <= j <= n-2 and j >= l-1,
///            or v <=lex x_2^{d-1} x_{n-1};
///  depth >=2 iff v = x_2^{d-1} x_j with 2 <= j <= n-2 and l >= j+2.
inline DepthCase depth_class(const LexSpec &s) {
  require_reduced_arbitrary(s, "depth_class");
  const std::size_t n = s.n();
  const int d = s.d();
  const int nn = static_cast<int>(n);
  Monomial xn = Monomial::var(n, nn);
  Monomial x1 = Monomial::var(n, 1);
  if (xn * s.u() >= x1 * s.v())
    return DepthCase::Depth0;

  const int l = s.l();
  const bool a = s.a(l) < d - 1;

  // v = x_2^{d-1} x_j for some 2 <= j <= n-2; j = 0 when not of that shape.
  int j = 0;
  for (int t = 2; t <= nn - 2 && j == 0; ++t)
    if (s.v() == Monomial::var(n, 2, d - 1) * Monomial::var(n, t))
      j = t;

  bool ge2 = j != 0 && l >= j + 2;
  bool one = (j != 0 && j >= l - 1) ||
             s.v() <= Monomial::var(n, 2, d - 1) * Monomial::var(n, nn - 1);
  if (ge2 == one)
    throw internal_error("depth criteria do not decide " + s.to_string());
  if (ge2)
    return a ? DepthCase::DepthGe2A : DepthCase::DepthGe2B;
  return a ? DepthCase::Depth1A : DepthCase::Depth1B;
}

/// A finite simplicial complex on vertices 1..vertex_count, stored by its
/// facets as bitmasks (bit i-1 is vertex i). No facets: the void complex.
/// The single facet 0 is the complex {emptyset}.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  SimplicialComplex(int vertex_count, std::vector<std::uint64_t> faces)
      : vertex_count_(vertex_count) {
    if (vertex_count < 0 || vertex_count > 63)
      throw std::invalid_argument("simplicial complex supports up to 63 vertices");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto f : faces) {
      bool dominated = std::any_of(faces.begin(), faces.end(), [&](auto g) {
        return g != f && (f & g) == f;
      });
      if (!dominated)
        facets_.push_back(f);
    }
  }

  /// Build from faces given as lists of 1-based vertices.
  static SimplicialComplex from_faces(int vertex_count,
                                      const std::vector<std::vector<int>> &faces) {
    std::vector<std::uint64_t> masks;
    for (const auto &f : faces) {
      std::uint64_t m = 0;
      for (int v : f)
        m |= std::uint64_t{1} << (v - 1);
      masks.push_back(m);
    }
    return SimplicialComplex(vertex_count, std::move(masks));
  }

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::uint64_t> &facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }

  /// All faces grouped by dimension; entry k holds the (k-1)-dimensional
  /// faces, so entry 0 is {emptyset} for a non-void complex.
  std::vector<std::vector<std::uint64_t>> faces_by_size() const {
    std::set<std::uint64_t> all;
    for (auto f : facets_) {
      // Enumerate submasks of f, including 0.
      for (std::uint64_t s = f;; s = (s - 1) & f) {
        all.insert(s);
        if (s == 0)
          break;
      }
    }
    std::vector<std::vector<std::uint64_t>> by;
    for (auto s : all) {
      auto k = static_cast<std::size_t>(std::popcount(s));
      if (by.size() <= k)
        by.resize(k + 1);
      by[k].push_back(s);
    }
    return by;
  }

private:
  int vertex_count_ = 0;
  std::vector<std::uint64_t> facets_;
};

namespace detail {

inline bool is_prime_number(long p) {
  if (p < 2)
    return false;
  for (long k = 2; k * k <= p; ++k)
    if (p % k == 0)
      return false;
  return true;
}

inline long mod_pow(long b, long e, long p) {
  long r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Rank over GF(p) by row reduction; entries already reduced mod p.
inline int rank_mod_p(std::vector<std::vector<long>> m, long p) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    auto r0 = static_cast<std::size_t>(rank);
    std::size_t piv = r0;
    while (piv < rows && m[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(m[piv], m[r0]);
    long inv = mod_pow(m[r0][c], p - 2, p);
    for (auto &x : m[r0])
      x = x * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == r0 || m[r][c] == 0)
        continue;
      long f = m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        m[r][k] = ((m[r][k] - f * m[r0][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

} // namespace detail

/// Reduced homology ranks over GF(p): element k is dim H~_{k-1}, so the
/// list starts at H~_{-1}. Empty for the void complex.
inline std::vector<int> homology_ranks(const SimplicialComplex &c, long p) {
  if (!detail::is_prime_number(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (c.is_void())
    return {};
  auto faces = c.faces_by_size();
  const std::size_t top = faces.size(); // sizes 0..top-1
  // boundary_rank[k] = rank of the map from size-k faces to size-(k-1) faces.
  std::vector<int> boundary_rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    const auto &hi = faces[k];
    const auto &lo = faces[k - 1];
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < lo.size(); ++i)
      index[lo[i]] = i;
    std::vector<std::vector<long>> mat(hi.size(), std::vector<long>(lo.size(), 0));
    for (std::size_t r = 0; r < hi.size(); ++r) {
      int pos = 0;
      for (int v = 0; v < 64; ++v) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if (!(hi[r] & bit))
          continue;
        long sign = (pos % 2 == 0) ? 1 : p - 1;
        mat[r][index.at(hi[r] & ~bit)] = sign % p;
        ++pos;
      }
    }
    boundary_rank[k] = detail::rank_mod_p(std::move(mat), p);
  }
  std::vector<int> ranks(top, 0);
  for (std::size_t k = 0; k < top; ++k)
    ranks[k] = static_cast<int>(faces[k].size()) - boundary_rank[k] -
               boundary_rank[k + 1];
  return ranks;
}

/// K^b(I) = { squarefree sigma in supp(b) : x^b / x^sigma in I }.
inline SimplicialComplex upper_koszul_complex(const MonomialIdeal &I,
                                              const Monomial &b) {
  if (b.nvars() != I.nvars())
    throw dimension_error("upper_koszul_complex across rings");
  const auto n = static_cast<int>(I.nvars());
  std::uint64_t support = 0;
  for (int v : b.supp())
    support |= std::uint64_t{1} << (v - 1);
  std::vector<std::uint64_t> faces;
  for (std::uint64_t s = support;; s = (s - 1) & support) {
    std::vector<int> e = b.exps();
    for (int v = 0; v < n; ++v)
      if (s & (std::uint64_t{1} << v))
        --e[static_cast<std::size_t>(v)];
    if (I.contains(Monomial(std::move(e))))
      faces.push_back(s);
    if (s == 0)
      break;
  }
  return SimplicialComplex(n, std::move(faces));
}

/// Nonzero multigraded Betti numbers beta_{i,b}(I), keyed by (i, b).
using BettiTable = std::map<std::pair<int, Monomial>, int>;

/// The lcm lattice of the minimal generators: closure under pairwise lcm.
inline std::set<Monomial> lcm_lattice(const MonomialIdeal &I) {
  std::set<Monomial> lat(I.gens().begin(), I.gens().end());
  std::vector<Monomial> frontier(lat.begin(), lat.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    std::vector<Monomial> snapshot(lat.begin(), lat.end());
    for (const auto &a : frontier)
      for (const auto &b : snapshot) {
        Monomial m = lcm(a, b);
        if (lat.insert(m).second)
          next.push_back(m);
      }
    frontier = std::move(next);
  }
  return lat;
}

/// beta_{i,b}(I) = dim H~_{i-1}(K^b(I); GF(p)) over the lcm lattice.
inline BettiTable betti_numbers(const MonomialIdeal &I, long p) {
  if (I.is_zero() || I.is_unit())
    throw std::domain_error("betti_numbers needs a proper nonzero ideal");
  BettiTable t;
  for (const auto &b : lcm_lattice(I)) {
    auto ranks = homology_ranks(upper_koszul_complex(I, b), p);
    for (std::size_t k = 0; k < ranks.size(); ++k)
      if (ranks[k] > 0)
        t[{static_cast<int>(k), b}] = ranks[k];
  }
  return t;
}

/// Total Betti numbers beta_i(I), indexed by i.
inline std::vector<int> total_betti(const BettiTable &t) {
  std::vector<int> out;
  for (const auto &[key, r] : t) {
    auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i)
      out.resize(i + 1, 0);
    out[i] += r;
  }
  return out;
}

/// depth(S/I) = n - pd(S/I), with pd(S/I) = 1 + max{ i : beta_i(I) != 0 }.
inline int depth_exact(const MonomialIdeal &I, long p = 32003) {
  auto t = betti_numbers(I, p);
  int pd_ideal = 0;
  for (const auto &[key, r] : t)
    pd_ideal = std::max(pd_ideal, key.first);
  return static_cast<int>(I.nvars()) - (pd_ideal + 1);
}

} // namespace lexseg
