#include <catch_amalgamated.hpp>

#include "lexseg/filtration.hpp"
#include "lexseg/lexass.hpp"
#include "support.hpp"

using namespace lexseg;

TEST_CASE("closed form, oracle and brute force agree for n = 5, d = 2") {
  for (const auto &s : ref::all_specs(5, 5, 2, 2)) {
    INFO(s.to_string());
    auto I = lexsegment_generators(s);
    auto closed = associated_primes_lexsegment(s);
    CHECK(closed == associated_primes_oracle(I).primes);
    CHECK(ref::as_var_sets(closed) == ref::brute_ass(ref::gens_of(I), s.n()));
  }
}

TEST_CASE("associated primes are stable under the normalisation") {
  for (const auto &s : ref::all_specs(2, 4, 2, 3)) {
    auto nf = normalize_spec(s);
    auto whole = associated_primes_lexsegment(s);
    std::set<PrimeIdeal> rebuilt(nf.extra_primes.begin(), nf.extra_primes.end());
    if (nf.working)
      for (const auto &p : associated_primes_lexsegment(*nf.working))
        rebuilt.insert(p.shifted(nf.var_offset));
    CHECK(whole == rebuilt);
  }
}

TEST_CASE("every closed-form prime has a witness") {
  for (const auto &s : ref::all_specs(2, 4, 2, 3)) {
    auto I = lexsegment_generators(s);
    for (const auto &p : associated_primes_lexsegment(s)) {
      auto w = witness_search(I, p);
      REQUIRE(w);
      CHECK(is_witness(I, p, *w));
    }
  }
}

TEST_CASE("Stanley bound of the staged filtration dominates the depth") {
  for (const auto &s : ref::all_specs(2, 4, 2, 2)) {
    INFO(s.to_string());
    auto F = staged_filtration(s);
    auto D = stanley_decomposition(F);
    CHECK(sdepth_lower_bound(D) >= depth_exact(F.base));
    CHECK(disjoint_cover_check(F.base, D, s.d() + max_witness_degree(F) + 2).passed());
  }
}

TEST_CASE("pretty clean filtrations have support equal to Ass") {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto I = ref::random_ideal(rng, 3, 4, 2);
    auto F = search_filtration(I, 50000);
    if (!F)
      continue;
    ++checked;
    CHECK(verify_prime_filtration(*F).passed());
    CHECK(verify_pretty_clean(*F).passed());
    CHECK(ref::as_var_sets(F->support()) == ref::brute_ass(ref::gens_of(I), I.nvars()));
  }
  CHECK(checked > 30);
}
