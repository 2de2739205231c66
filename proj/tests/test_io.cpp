#include <catch_amalgamated.hpp>

#include <random>

#include "lexseg/io.hpp"
#include "support.hpp"

using namespace lexseg;
using ref::mono;

namespace {

std::size_t error_position(const std::string &text, std::size_t n) {
  try {
    parse_monomial(text, n);
  } catch (const parse_error &e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

} // namespace

TEST_CASE("parse_monomial") {
  CHECK(parse_monomial("x1^2*x3", 3) == mono({2, 0, 1}));
  CHECK(parse_monomial("1", 4) == Monomial::one(4));
  CHECK(parse_monomial("x3*x1", 3) == mono({1, 0, 1}));
  CHECK(parse_monomial("x10", 10).deg(10) == 1);
  CHECK_THROWS_AS(parse_monomial("x5", 3), parse_error);
  CHECK(error_position("x5", 3) == 1);
  CHECK(error_position("x1*x1", 2) == 3);
  CHECK(error_position("x1^0", 2) == 3);
  CHECK(error_position("x1**x2", 2) == 3);
  CHECK(error_position("y1", 2) == 0);
  CHECK(error_position("", 2) == 0);
  CHECK(error_position("x1*", 2) == 3);
  CHECK(error_position("x1 ", 2) == 2);
  CHECK(error_position("x0", 2) == 1);
  CHECK(error_position("x1^", 2) == 3);
  CHECK_THROWS_AS(parse_monomial("x1", 0), parse_error);
}

TEST_CASE("parse_monomial inverts to_string") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &m : enumerate_up_to_degree(n, 3))
      CHECK(parse_monomial(m.to_string(), n) == m);
}

TEST_CASE("JSON layout") {
  auto I = ref::ideal(3, {{1, 1, 0}, {0, 0, 2}});
  CHECK(to_json(I) == json::parse(R"({"n":3,"gens":[[1,1,0],[0,0,2]]})"));
  CHECK(to_json(ref::prime(4, {4, 2})) == json::parse("[2,4]"));
  PrimeFiltration F{ref::ideal(2, {{1, 1}}),
                    {{mono({0, 1}), ref::prime(2, {1})},
                     {mono({0, 0}), ref::prime(2, {2})}}};
  CHECK(to_json(F) == json::parse(R"({"base":{"n":2,"gens":[[1,1]]},
      "steps":[{"witness":[0,1],"prime":[1]},{"witness":[0,0],"prime":[2]}]})"));
}

TEST_CASE("JSON round trips") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto I = ref::random_ideal(rng, 4, 5, 3);
    const auto n = I.nvars();
    auto text = to_json(I).dump();
    CHECK(ideal_from_json(json::parse(text)) == I);
    for (const auto &g : I.gens())
      CHECK(monomial_from_json(json::parse(to_json(g).dump()), n) == g);
    std::vector<int> vars;
    for (int i = 1; i <= static_cast<int>(n); ++i)
      if (rng() % 2)
        vars.push_back(i);
    PrimeIdeal P(n, vars);
    CHECK(prime_from_json(json::parse(to_json(P).dump()), n) == P);
  }
  for (const auto &s : ref::all_specs(2, 3, 2, 2)) {
    auto F = staged_filtration(s);
    CHECK(filtration_from_json(json::parse(to_json(F).dump())) == F);
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"n":2})")), parse_error);
  CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"n":0,"gens":[]})")), parse_error);
  CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"n":2,"gens":[[1]]})")),
                  parse_error);
  CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"n":2,"gens":[[1,-1]]})")),
                  parse_error);
  CHECK_THROWS_AS(prime_from_json(json::parse("[3]"), 2), parse_error);
  CHECK_THROWS_AS(filtration_from_json(json::parse(R"({"base":{"n":1,"gens":[[1]]}})")),
                  parse_error);
}
