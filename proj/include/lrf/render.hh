#pragma once

#include <lrf/lattice.hh>
#include <lrf/lts.hh>
#include <lrf/progress.hh>
#include <lrf/stratification.hh>
#include <lrf/upto_checker.hh>

#include <string>

namespace lrf
{
  /// "~k = {...}" per stratum, then "epsilon = e".
  std::string render_strata(const lts& sys, const strata_sequence& seq);

  std::string render_violation(const lts& sys, const progress_violation& v);

  std::string render_report(const lts& sys, const proof_report& report);

  /// The z-chain followed by the companion value of every element.
  std::string render_lattice_companion(const finite_lattice& l,
                                       const lattice_chain& chain);
}
