#include <lrf/companion.hh>
#include <lrf/sampling.hh>
#include <lrf/upto_checker.hh>

#include "fixtures.hh"

#include <doctest.h>

using namespace lrf;
using fixture::rel;

TEST_CASE("companion proof: a-loop against the two-state a-cycle")
{
  auto sys = fixture::loop_vs_cycle();
  auto r = rel(3, {{0, 1}});
  auto report = check_companion(sys, r, "loop~cycle");
  CHECK(report.relation_name == "loop~cycle");
  CHECK(report.function_name == "lrf");
  CHECK(report.trusted);
  CHECK(report.progression_holds);
  CHECK(report.conclusion == conclusion::contained_in_bisimilarity);
  CHECK(report.cross_check);

  // Plain bisimulation proof fails: the derivative pair (0,2) is missing.
  auto seq = compute_strata(sys);
  auto id = catalog(sys, seq).front();
  REQUIRE(id.name == "identity");
  auto plain = check_upto(sys, seq, r, id);
  CHECK_FALSE(plain.progression_holds);
  CHECK(plain.conclusion == conclusion::inconclusive);
  CHECK(plain.cross_check);
}

TEST_CASE("companion proof: deadlock against a-loop")
{
  auto sys = fixture::deadlock_vs_loop();
  auto report = check_companion(sys, rel(2, {{0, 1}}));
  CHECK_FALSE(report.progression_holds);
  CHECK(report.conclusion == conclusion::inconclusive);
  CHECK_FALSE(report.cross_check);
  REQUIRE(report.diagnosis.violations.size() == 1);
  CHECK(report.diagnosis.violations[0].direction == side::right);
  CHECK(report.diagnosis.violations[0].source == 1);
}

TEST_CASE("the empty relation is vacuously fine for every trusted function")
{
  auto sys = fixture::loop_vs_cycle();
  auto seq = compute_strata(sys);
  for (const auto& f : catalog(sys, seq))
    {
      auto rep = check_upto(sys, seq, relation(3), f);
      CHECK(rep.trusted);
      CHECK(rep.progression_holds);
      CHECK(rep.conclusion == conclusion::contained_in_bisimilarity);
      CHECK(rep.cross_check);
    }
  CHECK(check_companion(sys, relation(3)).conclusion
        == conclusion::contained_in_bisimilarity);
}

TEST_CASE("untrusted functions never conclude")
{
  auto sys = fixture::deadlock_vs_loop();
  upto_function everything{"everything", [](const relation& r) {
                             return relation::full(r.n_states());
                           }};
  auto rep = check_upto(sys, relation(2), everything);
  CHECK_FALSE(rep.trusted);
  CHECK(rep.progression_holds);
  CHECK(rep.conclusion == conclusion::inconclusive);
}

TEST_CASE("soundness and maximality on random systems")
{
  rng_t rng(31);
  for (int i = 0; i < 60; ++i)
    {
      auto sys = random_lts(rng, 1 + i % 4, 1 + i % 2, 0.35);
      auto seq = compute_strata(sys);
      auto cat = catalog(sys, seq);
      for (int j = 0; j < 8; ++j)
        {
          auto r = j % 2 ? random_subrelation(rng, bisimilarity(seq), 0.6)
                         : random_relation(rng, sys.n_states(), 0.2);
          bool some = false;
          for (const auto& f : cat)
            {
              auto rep = check_upto(sys, seq, r, f);
              if (rep.conclusion == conclusion::contained_in_bisimilarity)
                CHECK(rep.cross_check);
              some |= rep.progression_holds;
            }
          auto comp = check_companion(sys, seq, r);
          if (comp.conclusion == conclusion::contained_in_bisimilarity)
            CHECK(comp.cross_check);
          if (some)
            CHECK(comp.conclusion == conclusion::contained_in_bisimilarity);
        }
    }
}
