#pragma once

#include <lrf/lts.hh>
#include <lrf/relation.hh>

#include <cstddef>
#include <vector>

namespace lrf
{
  /// Brute-force counterparts of the pointwise algorithms, enumerating all
  /// 2^(n^2) relations on the states.  Hard-capped at this many states.
  inline constexpr std::size_t max_enumeration_states = 3;

  /// ⋃ {X | X ↣ s}.
  relation union_of_progressing(const lts& sys, const relation& s);

  /// ⋃ {X | X ↣ X}, i.e. bisimilarity by definition.
  relation union_of_self_progressing(const lts& sys);

  /// Every system on n_states states over labels "a", "b", ... (n_labels
  /// of them), one per subset of the possible transitions.
  std::vector<lts> all_systems(std::size_t n_states, std::size_t n_labels);
}
