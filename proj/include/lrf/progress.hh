#pragma once

#include <lrf/lts.hh>
#include <lrf/relation.hh>

#include <vector>

namespace lrf
{
  /// Which clause of the progress definition failed: `left` means a move of
  /// the left state p went unmatched by q, `right` a move of q unmatched by p.
  enum class side
  {
    left,
    right,
  };

  struct progress_violation
  {
    state_t p;
    state_t q;
    side direction;
    /// The unmatched transition source -label-> target (source is p for
    /// `left`, q for `right`).
    label_t label;
    state_t source;
    state_t target;

    friend bool operator==(const progress_violation&,
                           const progress_violation&) = default;
  };

  struct progress_diagnosis
  {
    bool holds = true;
    std::vector<progress_violation> violations;
  };

  /// Does r progress to s?  Every failed clause instance is reported, in
  /// order of pair, then side, then transition.
  progress_diagnosis progresses_to(const lts& sys, const relation& r,
                                   const relation& s);

  /// Same verdict as progresses_to(...).holds, without building witnesses.
  bool progresses(const lts& sys, const relation& r, const relation& s);

  /// Whether the single pair (p, q) satisfies both progress clauses with
  /// derivatives in s.
  bool pair_progresses(const lts& sys, state_t p, state_t q,
                       const relation& s);

  /// The largest relation progressing to s.  Relations progressing to a
  /// fixed s are closed under union, so the union of all of them is the set
  /// of pairs that progress individually.
  relation largest_progressing_to(const lts& sys, const relation& s);
}
