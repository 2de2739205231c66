#include <catch_amalgamated.hpp>

#include "lexseg/filtration.hpp"
#include "support.hpp"

using namespace lexseg;
using ref::ideal;
using ref::mono;
using ref::prime;

TEST_CASE("greedy filtration examples") {
  auto I = ideal(2, {{1, 1}});
  auto F = greedy_filtration(I);
  std::vector<FiltrationStep> want{{mono({0, 1}), prime(2, {1})},
                                   {mono({0, 0}), prime(2, {2})}};
  CHECK(F.steps == want);
  CHECK(verify_prime_filtration(F).passed());
  CHECK(verify_pretty_clean(F).passed());
  CHECK(supp_equals_ass(F).passed());

  auto M = greedy_filtration(PrimeIdeal::maximal(3).to_ideal());
  REQUIRE(M.steps.size() == 1);
  CHECK(M.steps[0] == FiltrationStep{Monomial::one(3), PrimeIdeal::maximal(3)});

  auto J = ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}});
  auto G = greedy_filtration(J);
  CHECK(verify_prime_filtration(G).passed());
  auto P = search_filtration(J);
  REQUIRE(P);
  CHECK(verify_pretty_clean(*P).passed());
  CHECK(P->support() == std::set<PrimeIdeal>{prime(3, {1, 2}), prime(3, {2, 3}),
                                             PrimeIdeal::maximal(3)});
  CHECK_THROWS_AS(greedy_filtration(MonomialIdeal::unit(2)), std::domain_error);
}

TEST_CASE("search filtration examples") {
  auto m2 = MonomialIdeal(2, enumerate_degree(2, 2));
  auto F = search_filtration(m2);
  REQUIRE(F);
  CHECK(F->steps.size() == 3);
  for (const auto &st : F->steps)
    CHECK(st.prime == PrimeIdeal::maximal(2));
  auto I = ideal(2, {{1, 1}});
  CHECK(search_filtration(I) == std::optional(greedy_filtration(I)));
}

TEST_CASE("verifiers reject constructed failures") {
  auto F = greedy_filtration(ideal(2, {{1, 1}}));
  auto swapped = F;
  std::swap(swapped.steps[0], swapped.steps[1]);
  CHECK_FALSE(verify_prime_filtration(swapped).passed());

  // (x1) before (x1, x2): a prime filtration but not pretty clean.
  PrimeFiltration bad{ideal(2, {{2, 0}, {1, 1}}),
                      {{mono({0, 1}), prime(2, {1})},
                       {mono({1, 0}), prime(2, {1, 2})},
                       {mono({0, 0}), prime(2, {1, 2})}}};
  CHECK(verify_prime_filtration(bad).passed());
  auto r = verify_pretty_clean(bad);
  REQUIRE_FALSE(r.passed());
  CHECK(r.violations.front().index == 0);
  CHECK(r.violations.front().other == 1);

  PrimeFiltration short_chain{ideal(2, {{1, 1}}), {F.steps[0]}};
  CHECK_FALSE(verify_prime_filtration(short_chain).passed());
  PrimeFiltration wrong_supp{ideal(2, {{1, 1}}),
                             {{mono({0, 1}), prime(2, {1})},
                              {mono({0, 0}), prime(2, {2})}}};
  CHECK(supp_equals_ass(wrong_supp).passed());
  wrong_supp.steps[1].prime = prime(2, {1, 2});
  CHECK_FALSE(supp_equals_ass(wrong_supp).passed());
}

TEST_CASE("staged filtration examples") {
  LexSpec a(3, 2, mono({2, 0, 0}), mono({1, 0, 1}));
  auto F = staged_filtration(a);
  REQUIRE_FALSE(F.steps.empty());
  CHECK(F.steps.back() == FiltrationStep{Monomial::one(3), prime(3, {1})});
  for (std::size_t k = 0; k + 1 < F.steps.size(); ++k)
    CHECK(F.steps[k].witness.deg(1) >= 1);
  CHECK(verify_prime_filtration(F).passed());
  CHECK(verify_pretty_clean(F).passed());

  LexSpec b(3, 2, mono({1, 1, 0}), mono({0, 1, 1}));
  auto R = staged_filtration_report(b);
  auto I = lexsegment_generators(b);
  REQUIRE(R.boundaries.size() == 1);
  CHECK(R.boundaries[0] == colon(I, mono({1, 0, 0})));
  CHECK(R.boundaries[0] == ideal(3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(R.dropped.empty());
  auto chain = R.filtration.chain();
  CHECK(std::find(chain.begin(), chain.end(), R.boundaries[0]) != chain.end());
  CHECK(verify_pretty_clean(R.filtration).passed());
  CHECK(supp_equals_ass(R.filtration).passed());
}

TEST_CASE("a prescribed stage that no pretty clean filtration passes through") {
  // I = L(x1 x2, x2^2) in four variables; stage A = I : x1 = (x2, x3, x4).
  LexSpec s(4, 2, mono({1, 1, 0, 0}), mono({0, 2, 0, 0}));
  auto I = lexsegment_generators(s);
  auto A = colon(I, mono({1, 0, 0, 0}));
  REQUIRE(A == ideal(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

  // x1 kills A/I and (x1, x2) is the only associated prime of S/I holding
  // x1, so a pretty clean chain from I to A has all factors S/(x1, x2) and
  // HS(A/I) (1 - x3)(1 - x4) would have non-negative coefficients. The
  // coefficient of x3 x4 is -1.
  auto gens = ref::gens_of(I);
  auto in_quotient = [&](ref::Exps e) {
    Monomial m(e);
    return A.contains(m) && !ref::member(gens, e);
  };
  int coeff = 0;
  for (int e3 = 0; e3 <= 1; ++e3)
    for (int e4 = 0; e4 <= 1; ++e4)
      coeff += ((e3 + e4) % 2 ? -1 : 1) * (in_quotient({0, 0, 1 - e3, 1 - e4}) ? 1 : 0);
  CHECK(coeff == -1);

  std::vector<FiltrationStep> steps;
  CHECK(detail::extend_through(I, {A, MonomialIdeal::unit(4)}, steps, 200000) ==
        detail::SearchOutcome::Exhausted);
  CHECK(steps.empty());

  auto R = staged_filtration_report(s);
  CHECK(R.dropped == std::vector<MonomialIdeal>{A});
  CHECK(verify_prime_filtration(R.filtration).passed());
  CHECK(verify_pretty_clean(R.filtration).passed());
  CHECK(supp_equals_ass(R.filtration).passed());
}

TEST_CASE("staged filtration of L(x1 x2, x2 x3) in four variables") {
  LexSpec s(4, 2, mono({1, 1, 0, 0}), mono({0, 1, 1, 0}));
  auto R = staged_filtration_report(s);
  REQUIRE(R.boundaries.size() == 1);
  CHECK(R.boundaries[0] == ideal(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  // The stage I : x1 admits no pretty clean continuation here either.
  std::vector<FiltrationStep> steps;
  CHECK(detail::extend_through(lexsegment_generators(s),
                               {R.boundaries[0], MonomialIdeal::unit(4)}, steps,
                               200000) == detail::SearchOutcome::Exhausted);
  CHECK(R.dropped == R.boundaries);
  CHECK(verify_prime_filtration(R.filtration).passed());
  CHECK(verify_pretty_clean(R.filtration).passed());
  CHECK(supp_equals_ass(R.filtration).passed());
}

TEST_CASE("staged filtration on every small lexsegment") {
  for (const auto &s : ref::all_specs(1, 4, 1, 3)) {
    INFO(s.to_string());
    auto R = staged_filtration_report(s);
    const auto &F = R.filtration;
    CHECK(F.base == lexsegment_generators(s));
    CHECK(verify_prime_filtration(F).passed());
    CHECK(verify_pretty_clean(F).passed());
    CHECK(supp_equals_ass(F).passed());
    auto chain = F.chain();
    for (const auto &b : R.boundaries) {
      bool dropped = std::find(R.dropped.begin(), R.dropped.end(), b) != R.dropped.end();
      bool on_chain = std::find(chain.begin(), chain.end(), b) != chain.end();
      if (!dropped)
        CHECK(on_chain);
    }
    CHECK(search_filtration(F.base));
    CHECK(verify_prime_filtration(greedy_filtration(F.base)).passed());
  }
}

TEST_CASE("Stanley decompositions") {
  auto F = greedy_filtration(ideal(2, {{1, 1}}));
  auto D = stanley_decomposition(F);
  REQUIRE(D.spaces.size() == 2);
  CHECK(D.spaces[0] == StanleySpace{mono({0, 1}), {2}});
  CHECK(D.spaces[1] == StanleySpace{mono({0, 0}), {1}});
  CHECK(sdepth_lower_bound(D) == 1);
  auto cover = disjoint_cover_check(F.base, D, 4);
  CHECK(cover.passed());
  CHECK(cover.standard_monomials == 9);

  auto M = stanley_decomposition(greedy_filtration(PrimeIdeal::maximal(3).to_ideal()));
  REQUIRE(M.spaces.size() == 1);
  CHECK(M.spaces[0].free_vars.empty());
  CHECK(sdepth_lower_bound(M) == 0);

  auto L = staged_filtration(LexSpec(3, 2, mono({1, 1, 0}), mono({0, 1, 1})));
  CHECK(sdepth_lower_bound(stanley_decomposition(L)) == 0);
  CHECK(max_witness_degree(L) >= 0);
  CHECK_THROWS(sdepth_lower_bound(StanleyDecomposition{2, {}}));
}

TEST_CASE("cover check reports constructed failures") {
  auto F = greedy_filtration(ideal(2, {{1, 1}}));
  auto D = stanley_decomposition(F);
  auto dropped = D;
  dropped.spaces.pop_back();
  auto r1 = disjoint_cover_check(F.base, dropped, 4);
  CHECK_FALSE(r1.passed());
  CHECK_FALSE(r1.misses.empty());

  auto doubled = D;
  doubled.spaces.push_back(D.spaces.front());
  auto r2 = disjoint_cover_check(F.base, doubled, 4);
  CHECK_FALSE(r2.passed());
  CHECK_FALSE(r2.double_covers.empty());

  auto inside = D;
  inside.spaces.push_back({mono({1, 1}), {}});
  CHECK_FALSE(disjoint_cover_check(F.base, inside, 4).covered_in_ideal.empty());
}
