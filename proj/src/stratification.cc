#include <lrf/stratification.hh>

#include <lrf/progress.hh>

#include <stdexcept>
#include <string>

namespace lrf
{
  strata_sequence compute_strata(const lts& sys)
  {
    const auto n = sys.n_states();
    strata_sequence seq;
    seq.strata_.push_back(relation::full(n));
    for (;;)
      {
        auto next = largest_progressing_to(sys, seq.strata_.back());
        if (next == seq.strata_.back())
          break;
        seq.strata_.push_back(std::move(next));
      }

    // A strictly decreasing chain of relations on n states has at most n^2
    // strict steps.
    if (seq.epsilon() > n * n)
      throw std::logic_error("strata chain longer than n^2: "
                             + std::to_string(seq.epsilon()));
    if (!progresses(sys, seq.strata_.back(), seq.strata_.back()))
      throw std::logic_error("stable stratum does not progress to itself");
    return seq;
  }

  const relation& stratum(const strata_sequence& seq, std::size_t k)
  {
    const auto& s = seq.strata();
    return k < s.size() ? s[k] : s.back();
  }

  const relation& bisimilarity(const strata_sequence& seq)
  {
    return seq.strata().back();
  }
}
