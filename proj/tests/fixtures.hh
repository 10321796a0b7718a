#pragma once

#include <lrf/lts.hh>
#include <lrf/relation.hh>

#include <vector>

namespace fixture
{
  /// p -a-> p ; q1 -a-> q2 -a-> q1.  States p=0, q1=1, q2=2.
  inline lrf::lts loop_vs_cycle()
  {
    lrf::lts_builder b;
    auto p = b.add_state("p");
    auto q1 = b.add_state("q1");
    auto q2 = b.add_state("q2");
    b.add_transition(p, "a", p);
    b.add_transition(q1, "a", q2);
    b.add_transition(q2, "a", q1);
    return b.build();
  }

  /// d has no transitions ; l -a-> l.  States d=0, l=1.
  inline lrf::lts deadlock_vs_loop()
  {
    lrf::lts_builder b;
    auto d = b.add_state("d");
    auto l = b.add_state("l");
    (void) d;
    b.add_transition(l, "a", l);
    return b.build();
  }

  inline lrf::relation rel(std::size_t n,
                           std::vector<lrf::state_pair> pairs)
  {
    return lrf::relation::from_pairs(n, pairs);
  }
}
