#pragma once

#include <lrf/companion.hh>
#include <lrf/lts.hh>
#include <lrf/progress.hh>
#include <lrf/relation.hh>
#include <lrf/stratification.hh>

#include <string>

namespace lrf
{
  enum class conclusion
  {
    contained_in_bisimilarity,
    inconclusive,
  };

  /// Outcome of checking R ↣ f(R).
  ///
  /// The conclusion is contained_in_bisimilarity only when the progression
  /// holds and f is trusted (a catalog member or LRF).  cross_check is
  /// computed independently from the strata as R ⊆ ~eps.
  struct proof_report
  {
    std::string relation_name;
    std::string function_name;
    bool trusted = false;
    bool progression_holds = false;
    enum conclusion conclusion = conclusion::inconclusive;
    progress_diagnosis diagnosis;
    bool cross_check = false;
  };

  /// Whether `name` is LRF or a member of catalog(sys, seq).
  bool is_trusted_function(const lts& sys, const strata_sequence& seq,
                           const std::string& name);

  proof_report check_upto(const lts& sys, const strata_sequence& seq,
                          const relation& r, const upto_function& f,
                          std::string relation_name = "R");

  /// Computes the strata of sys first.
  proof_report check_upto(const lts& sys, const relation& r,
                          const upto_function& f,
                          std::string relation_name = "R");

  /// check_upto with f = LRF.
  proof_report check_companion(const lts& sys, const strata_sequence& seq,
                               const relation& r,
                               std::string relation_name = "R");

  proof_report check_companion(const lts& sys, const relation& r,
                               std::string relation_name = "R");
}
