#pragma once

#include <lrf/lts.hh>
#include <lrf/progress.hh>
#include <lrf/relation.hh>
#include <lrf/stratification.hh>

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lrf
{
  /// Index m of the smallest stratum containing r: eps when r ⊆ ~eps,
  /// otherwise one less than the first index whose stratum misses a pair
  /// of r.
  std::size_t lrf_index(const strata_sequence& seq, const relation& r);

  /// The largest respectful function, evaluated as the intersection of
  /// every stratum that contains r.  Equals stratum(seq, lrf_index(seq, r)).
  relation lrf(const strata_sequence& seq, const relation& r);

  /// A named function on relations over one fixed system, used as the
  /// target of up-to proofs.  Evaluation is deterministic and reentrant.
  struct upto_function
  {
    std::string name;
    std::function<relation(const relation&)> eval;

    relation operator()(const relation& r) const { return eval(r); }
  };

  /// LRF packaged as an upto_function named "lrf".
  upto_function lrf_function(std::shared_ptr<const strata_sequence> seq);

  /// Functions whose respectfulness follows from standard closure
  /// properties:
  ///   identity, const_bisim (R ↦ ~eps), upto_bisim (R ↦ ~eps ∘ R ∘ ~eps),
  ///   union_bisim (R ↦ R ∪ ~eps),
  /// then every ordered composition "f.g" (f after g) of two of these and
  /// every pointwise union "f+g" of two distinct ones.
  std::vector<upto_function> catalog(const lts& sys,
                                     const strata_sequence& seq);

  enum class respectfulness_clause
  {
    inclusion,
    progression,
  };

  struct respectfulness_counterexample
  {
    relation r;
    relation s;
    respectfulness_clause clause;
    /// Diagnosis of f(r) ↣ f(s); empty when the inclusion clause failed.
    progress_diagnosis diagnosis;
  };

  struct respectfulness_verdict
  {
    bool holds_on_samples = true;
    std::size_t checked = 0;
    /// Samples not meeting the hypothesis r ⊆ s, r ↣ s.
    std::size_t skipped = 0;
    std::optional<respectfulness_counterexample> counterexample;
  };

  /// Tests the respectfulness implication on each sample (r, s).  Samples
  /// violating the hypothesis are skipped and counted; the first
  /// counterexample is kept.
  respectfulness_verdict
  is_respectful_on_samples(const lts& sys, const upto_function& f,
                           std::span<const std::pair<relation, relation>>
                             samples);

  struct largest_verdict
  {
    bool holds = true;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::optional<relation> first_violation;
  };

  /// Checks f(r) ⊆ lrf(r) for every r.  For a respectful f any violation
  /// is a bug.
  largest_verdict check_lrf_largest(const strata_sequence& seq,
                                    const upto_function& f,
                                    std::span<const relation> rs);
}
