#include <lrf/ordinal_gallery.hh>
#include <lrf/stratification.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace lrf;

TEST_CASE("build_T structure")
{
  auto t0 = build_T(0);
  CHECK(t0.system.n_states() == 1);
  CHECK(t0.system.n_transitions() == 0);

  auto t1 = build_T(1).system;
  CHECK(t1.n_states() == 2);
  REQUIRE(t1.n_transitions() == 1);
  CHECK(t1.successors(1).front().target == 0);
  CHECK(t1.label(0) == "t");

  auto t2 = build_T(2).system;
  CHECK(oracle::triples(t2)
        == std::vector<oracle::triple>{{1, "t", 0}, {2, "t", 0}, {2, "t", 1}});

  for (std::size_t n = 0; n <= 8; ++n)
    {
      auto t = build_T(n).system;
      for (state_t i = 0; i <= n; ++i)
        {
          CHECK(t.successors(i).size() == i);
          for (auto tr : t.successors(i))
            CHECK(tr.target < i);
        }
    }
}

TEST_CASE("membership rule at small n")
{
  auto s1 = compute_strata(build_T(1).system);
  CHECK(stratum(s1, 0).contains(0, 1));
  CHECK_FALSE(stratum(s1, 1).contains(0, 1));

  auto s2 = compute_strata(build_T(2).system);
  CHECK(stratum(s2, 1).contains(1, 2));
  CHECK_FALSE(stratum(s2, 2).contains(1, 2));
}

TEST_CASE("gallery strata match brute-force iteration for n <= 2")
{
  for (std::size_t n = 0; n <= 2; ++n)
    {
      auto t = build_T(n).system;
      std::vector<relation> chain{relation::full(n + 1)};
      for (;;)
        {
          auto next = oracle::union_progressing(t, chain.back());
          if (next == chain.back())
            break;
          chain.push_back(next);
        }
      CHECK(chain.size() - 1 == n);
      CHECK(compute_strata(t).strata() == chain);
    }
}

TEST_CASE("verify_gallery passes with epsilon = n up to 8")
{
  for (std::size_t n = 0; n <= 8; ++n)
    {
      auto v = verify_gallery(n);
      CHECK_MESSAGE(v.passed, v.first_discrepancy);
      CHECK(v.epsilon == n);
      CHECK(compute_strata(build_T(n).system).epsilon() == n);
    }
}
