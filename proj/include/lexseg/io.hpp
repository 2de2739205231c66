#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "filtration.hpp"
#include "ideal.hpp"
#include "monomial.hpp"

namespace lexseg {

using json = nlohmann::json;

/// Parses "x1^2*x3" style monomials over n variables; "1" is the unit.
/// Whitespace is not allowed. Errors carry the 0-based offset of the fault.
inline Monomial parse_monomial(std::string_view text, std::size_t n) {
  if (n == 0)
    throw parse_error("monomial ring needs n >= 1", 0);
  if (text == "1")
    return Monomial::one(n);
  std::vector<int> e(n, 0);
  std::size_t pos = 0;

  auto read_int = [&](const char *what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos)
      throw parse_error(std::string("expected ") + what, start);
    if (pos - start > 9)
      throw parse_error(std::string(what) + " too large", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  while (true) {
    if (pos >= text.size() || text[pos] != 'x')
      throw parse_error("expected 'x'", pos);
    ++pos;
    std::size_t at = pos;
    int i = read_int("variable index");
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw parse_error("variable index " + std::to_string(i) +
                            " outside 1.." + std::to_string(n),
                        at);
    int x = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t ex = pos;
      x = read_int("exponent");
      if (x < 1)
        throw parse_error("exponent must be positive", ex);
    }
    auto &slot = e[static_cast<std::size_t>(i - 1)];
    if (slot)
      throw parse_error("repeated variable x" + std::to_string(i), at - 1);
    slot = x;
    if (pos == text.size())
      break;
    if (text[pos] != '*')
      throw parse_error("expected '*'", pos);
    ++pos;
  }
  return Monomial(std::move(e));
}

inline json to_json(const Monomial &m) { return m.exps(); }

inline json to_json(const MonomialIdeal &I) {
  json g = json::array();
  for (const auto &m : I.gens())
    g.push_back(to_json(m));
  return {{"n", I.nvars()}, {"gens", g}};
}

inline json to_json(const PrimeIdeal &P) { return P.vars(); }

inline json to_json(const PrimeFiltration &F) {
  json steps = json::array();
  for (const auto &s : F.steps)
    steps.push_back({{"witness", to_json(s.witness)}, {"prime", to_json(s.prime)}});
  return {{"base", to_json(F.base)}, {"steps", steps}};
}

inline json to_json(const std::set<PrimeIdeal> &s) {
  json a = json::array();
  for (const auto &p : s)
    a.push_back(to_json(p));
  return a;
}

namespace detail {

inline void expect(bool ok, const std::string &what) {
  if (!ok)
    throw parse_error(what, 0);
}

} // namespace detail

inline Monomial monomial_from_json(const json &j, std::size_t n) {
  detail::expect(j.is_array() && j.size() == n,
                 "monomial must be an array of " + std::to_string(n) +
                     " exponents");
  std::vector<int> e;
  for (const auto &x : j) {
    detail::expect(x.is_number_integer() && x.get<int>() >= 0,
                   "exponents must be non-negative integers");
    e.push_back(x.get<int>());
  }
  return Monomial(std::move(e));
}

inline MonomialIdeal ideal_from_json(const json &j) {
  detail::expect(j.is_object() && j.contains("n") && j.contains("gens"),
                 "ideal must be an object with \"n\" and \"gens\"");
  detail::expect(j["n"].is_number_integer() && j["n"].get<long>() >= 1,
                 "\"n\" must be a positive integer");
  auto n = j["n"].get<std::size_t>();
  detail::expect(j["gens"].is_array(), "\"gens\" must be an array");
  std::vector<Monomial> g;
  for (const auto &m : j["gens"])
    g.push_back(monomial_from_json(m, n));
  return MonomialIdeal(n, std::move(g));
}

inline PrimeIdeal prime_from_json(const json &j, std::size_t n) {
  detail::expect(j.is_array(), "prime must be an array of variable indices");
  std::vector<int> v;
  for (const auto &x : j) {
    detail::expect(x.is_number_integer(), "variable indices must be integers");
    int i = x.get<int>();
    detail::expect(i >= 1 && static_cast<std::size_t>(i) <= n,
                   "variable index " + std::to_string(i) + " outside 1.." +
                       std::to_string(n));
    v.push_back(i);
  }
  return PrimeIdeal(n, std::move(v));
}

inline PrimeFiltration filtration_from_json(const json &j) {
  detail::expect(j.is_object() && j.contains("base") && j.contains("steps") &&
                     j["steps"].is_array(),
                 "filtration must be an object with \"base\" and \"steps\"");
  PrimeFiltration F{ideal_from_json(j["base"]), {}};
  const auto n = F.base.nvars();
  for (const auto &s : j["steps"]) {
    detail::expect(s.is_object() && s.contains("witness") && s.contains("prime"),
                   "step must have \"witness\" and \"prime\"");
    F.steps.push_back(
        {monomial_from_json(s["witness"], n), prime_from_json(s["prime"], n)});
  }
  return F;
}

} // namespace lexseg
