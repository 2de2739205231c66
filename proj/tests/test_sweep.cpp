#include <catch_amalgamated.hpp>

#include "lexseg/sweep.hpp"

using namespace lexseg;

namespace {

SweepOptions range(int n_lo, int n_hi, int d_lo, int d_hi) {
  SweepOptions o;
  o.n_lo = n_lo;
  o.n_hi = n_hi;
  o.d_lo = d_lo;
  o.d_hi = d_hi;
  return o;
}

} // namespace

TEST_CASE("pair counts") {
  CHECK(sweep_pair_count(2, 2) == 6);
  CHECK(sweep_pair_count(5, 2) == 120);
  CHECK(sweep_pair_count(4, 3) == 210);
}

TEST_CASE("smallest sweep") {
  auto r = sweep(range(2, 2, 2, 2));
  CHECK(r.specs == 6);
  CHECK(r.passed());
  REQUIRE(r.counts.size() == sweep_families().size());
  for (std::size_t f = 0; f < r.counts.size(); ++f) {
    const auto &c = r.counts[f];
    CHECK(c.agreements + c.mismatches == c.tested);
  }
  CHECK(r.counts[0].tested == 6);
}

TEST_CASE("empty range") {
  auto r = sweep(range(3, 2, 2, 2));
  CHECK(r.specs == 0);
  CHECK(r.passed());
  CHECK(to_json(r)["counts"]["tested"] == 0);
}

TEST_CASE("sweep refuses oversized ranges and bad options") {
  auto o = range(4, 4, 3, 3);
  o.pair_cap = 100;
  CHECK_THROWS_AS(sweep(o), std::length_error);
  auto p = range(2, 2, 2, 2);
  p.primes = {4};
  CHECK_THROWS(sweep(p));
  p.primes.clear();
  CHECK_THROWS(sweep(p));
}

TEST_CASE("sweep is deterministic across runs and worker counts") {
  auto o = range(2, 3, 2, 3);
  auto a = to_json(sweep(o));
  o.jobs = 4;
  auto b = to_json(sweep(o));
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("a failing check is recorded as a mismatch of its family") {
  // A node budget of zero makes every non-trivial filtration search give up.
  auto o = range(3, 3, 2, 2);
  o.node_budget = 0;
  auto r = sweep(o);
  CHECK_FALSE(r.passed());
  CHECK(r.counts[1].mismatches > 0);
  CHECK(r.counts[0].mismatches == 0);
  for (const auto &m : r.mismatches)
    CHECK((m.family == "filtration" || m.family == "stanley" ||
           m.family == "field" || m.family == "depth"));
}
