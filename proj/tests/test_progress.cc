#include <lrf/enumeration.hh>
#include <lrf/error.hh>
#include <lrf/ordinal_gallery.hh>
#include <lrf/progress.hh>
#include <lrf/sampling.hh>

#include "fixtures.hh"
#include "oracles.hh"

#include <doctest.h>

using namespace lrf;
using fixture::rel;

TEST_CASE("progresses_to on the empty and identity relations")
{
  auto t2 = build_T(2).system;
  CHECK(progresses_to(t2, relation(3), relation(3)).holds);
  CHECK(progresses_to(t2, relation::identity(3), relation::identity(3)).holds);

  auto sys = fixture::loop_vs_cycle();
  CHECK(progresses_to(sys, relation::identity(3), relation::identity(3)).holds);
}

TEST_CASE("progresses_to on T_2 with witnesses")
{
  auto t2 = build_T(2).system;
  auto r = rel(3, {{1, 2}});

  auto ok = progresses_to(t2, r, rel(3, {{0, 0}, {0, 1}}));
  CHECK(ok.holds);
  CHECK(ok.violations.empty());
  CHECK(oracle::progresses(oracle::triples(t2), r, rel(3, {{0, 0}, {0, 1}})));

  auto bad = progresses_to(t2, r, rel(3, {{0, 0}}));
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(oracle::progresses(oracle::triples(t2), r, rel(3, {{0, 0}})));
  REQUIRE(bad.violations.size() == 1);
  const auto& v = bad.violations.front();
  CHECK(v.p == 1);
  CHECK(v.q == 2);
  CHECK(v.direction == side::right);
  CHECK(t2.label(v.label) == "t");
  CHECK(v.source == 2);
  CHECK(v.target == 1);
}

TEST_CASE("progresses_to rejects mismatched dimensions")
{
  auto t2 = build_T(2).system;
  CHECK_THROWS_AS(progresses_to(t2, relation(2), relation(3)),
                  dimension_mismatch);
  CHECK_THROWS_AS(progresses_to(t2, relation(3), relation(4)),
                  dimension_mismatch);
  CHECK_THROWS_AS(largest_progressing_to(t2, relation(2)),
                  dimension_mismatch);
}

TEST_CASE("largest_progressing_to with a full target")
{
  // Every state has an a-move.
  auto sys = fixture::loop_vs_cycle();
  CHECK(largest_progressing_to(sys, relation::full(3)) == relation::full(3));
}

TEST_CASE("a deadlocked state is never related to a state that can move")
{
  auto sys = fixture::deadlock_vs_loop();
  for (std::uint64_t m = 0; m < 16; ++m)
    {
      auto s = oracle::from_mask(2, m);
      auto largest = largest_progressing_to(sys, s);
      CHECK_FALSE(largest.contains(0, 1));
      CHECK_FALSE(largest.contains(1, 0));
      CHECK(largest == oracle::union_progressing(sys, s));
    }
}

TEST_CASE("largest_progressing_to equals the enumerated union on small systems")
{
  // Every one-label two-state system against every target.
  for (const auto& sys : all_systems(2, 1))
    for (std::uint64_t m = 0; m < 16; ++m)
      {
        auto s = oracle::from_mask(2, m);
        CHECK(largest_progressing_to(sys, s)
              == oracle::union_progressing(sys, s));
      }

  rng_t rng(11);
  for (int i = 0; i < 30; ++i)
    {
      auto sys = random_lts(rng, 3, 2, 0.3);
      auto s = random_relation(rng, 3, 0.5);
      auto expected = oracle::union_progressing(sys, s);
      CHECK(largest_progressing_to(sys, s) == expected);
      CHECK(union_of_progressing(sys, s) == expected);
    }
}

TEST_CASE("progress is monotone, union-closed, and characterized by the largest")
{
  rng_t rng(3);
  for (int i = 0; i < 300; ++i)
    {
      auto sys = random_lts(rng, 1 + i % 5, 1 + i % 2, 0.35);
      const auto n = sys.n_states();
      auto s = random_relation(rng, n, 0.5);
      auto largest = largest_progressing_to(sys, s);

      auto r1 = random_subrelation(rng, largest, 0.6);
      auto r2 = random_subrelation(rng, largest, 0.6);
      REQUIRE(progresses(sys, r1, s));
      CHECK(progresses(sys, r1 | r2, s));
      CHECK(progresses(sys, random_subrelation(rng, r1, 0.5),
                       random_superrelation(rng, s, 0.3)));

      auto any = random_relation(rng, n, 0.3);
      auto diag = progresses_to(sys, any, s);
      CHECK(diag.holds == relation_subset(any, largest));
      CHECK(diag.holds == diag.violations.empty());
      CHECK(diag.holds == oracle::progresses(oracle::triples(sys), any, s));
    }
}

TEST_CASE("enumeration helpers are capped")
{
  auto big = build_T(3).system;
  CHECK_THROWS_AS(union_of_progressing(big, relation::full(4)),
                  enumeration_limit);
  CHECK(all_systems(2, 1).size() == 16);
}
