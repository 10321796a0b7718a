#pragma once

#include <lrf/lts.hh>
#include <lrf/relation.hh>

#include <vector>

namespace lrf
{
  /// The chain ~0 ⊋ ~1 ⊋ ... ⊋ ~eps of stratified bisimilarity on a finite
  /// system, where ~0 is the full relation, ~(k+1) is the largest relation
  /// progressing to ~k, and eps is the least index with ~(eps+1) = ~eps.
  ///
  /// Only finite indices exist here: on a finite system the chain is
  /// strictly decreasing until it stabilizes, so no limit stage is ever
  /// reached.
  class strata_sequence
  {
  public:
    /// strata[k] holds ~k for k = 0..eps.
    const std::vector<relation>& strata() const noexcept { return strata_; }
    std::size_t epsilon() const noexcept { return strata_.size() - 1; }
    std::size_t n_states() const noexcept { return strata_.front().n_states(); }

  private:
    friend strata_sequence compute_strata(const lts& sys);
    std::vector<relation> strata_;
  };

  /// Iterates the successor step until two consecutive strata coincide.
  /// The stable stratum is checked to progress to itself before returning.
  strata_sequence compute_strata(const lts& sys);

  /// ~min(k, eps).  Beyond eps the chain is constant.
  const relation& stratum(const strata_sequence& seq, std::size_t k);

  /// ~eps, which is bisimilarity.
  const relation& bisimilarity(const strata_sequence& seq);
}
