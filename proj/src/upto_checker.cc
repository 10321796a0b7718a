#include <lrf/upto_checker.hh>

#include <memory>

namespace lrf
{
  bool is_trusted_function(const lts& sys, const strata_sequence& seq,
                           const std::string& name)
  {
    if (name == "lrf")
      return true;
    for (const auto& f : catalog(sys, seq))
      if (f.name == name)
        return true;
    return false;
  }

  proof_report check_upto(const lts& sys, const strata_sequence& seq,
                          const relation& r, const upto_function& f,
                          std::string relation_name)
  {
    require_over(sys, r);
    proof_report out;
    out.relation_name = std::move(relation_name);
    out.function_name = f.name;
    out.trusted = is_trusted_function(sys, seq, f.name);
    out.diagnosis = progresses_to(sys, r, f(r));
    out.progression_holds = out.diagnosis.holds;
    out.conclusion = out.progression_holds && out.trusted
                       ? conclusion::contained_in_bisimilarity
                       : conclusion::inconclusive;
    out.cross_check = relation_subset(r, bisimilarity(seq));
    return out;
  }

  proof_report check_upto(const lts& sys, const relation& r,
                          const upto_function& f, std::string relation_name)
  {
    return check_upto(sys, compute_strata(sys), r, f,
                      std::move(relation_name));
  }

  proof_report check_companion(const lts& sys, const strata_sequence& seq,
                               const relation& r, std::string relation_name)
  {
    auto f = lrf_function(std::make_shared<const strata_sequence>(seq));
    return check_upto(sys, seq, r, f, std::move(relation_name));
  }

  proof_report check_companion(const lts& sys, const relation& r,
                               std::string relation_name)
  {
    return check_companion(sys, compute_strata(sys), r,
                           std::move(relation_name));
  }
}
