#include <lrf/render.hh>

#include <lrf/documents.hh>

#include <sstream>

namespace lrf
{
  std::string render_strata(const lts& sys, const strata_sequence& seq)
  {
    std::ostringstream os;
    for (std::size_t k = 0; k < seq.strata().size(); ++k)
      os << "~" << k << " = " << format_relation(sys, seq.strata()[k])
         << "\n";
    os << "epsilon = " << seq.epsilon() << "\n";
    return os.str();
  }

  std::string render_violation(const lts& sys, const progress_violation& v)
  {
    std::ostringstream os;
    os << "(" << sys.state_name(v.p) << "," << sys.state_name(v.q) << ") "
       << (v.direction == side::left ? "left" : "right") << ": "
       << sys.state_name(v.source) << " -" << sys.label(v.label) << "-> "
       << sys.state_name(v.target) << " unmatched";
    return os.str();
  }

  std::string render_report(const lts& sys, const proof_report& report)
  {
    std::ostringstream os;
    os << "relation: " << report.relation_name << "\n"
       << "function: " << report.function_name
       << (report.trusted ? " (trusted)" : " (untrusted)") << "\n"
       << "progression: "
       << (report.progression_holds
             ? std::string("holds")
             : "fails (" + std::to_string(report.diagnosis.violations.size())
                 + " violations)")
       << "\n";
    for (const auto& v : report.diagnosis.violations)
      os << "  " << render_violation(sys, v) << "\n";
    os << "conclusion: "
       << (report.conclusion == conclusion::contained_in_bisimilarity
             ? "contained_in_bisimilarity"
             : "inconclusive")
       << "\n"
       << "cross_check: " << (report.cross_check ? "true" : "false") << "\n";
    return os.str();
  }

  std::string render_lattice_companion(const finite_lattice& l,
                                       const lattice_chain& chain)
  {
    std::ostringstream os;
    for (std::size_t k = 0; k < chain.zs.size(); ++k)
      os << "z" << k << " = " << l.name(chain.zs[k]) << "\n";
    os << "stable_index = " << chain.stable_index << "\n"
       << "companion:\n";
    for (element_t x = 0; x < l.size(); ++x)
      os << "  " << l.name(x) << " -> " << l.name(companion_at(l, chain, x))
         << "\n";
    return os.str();
  }
}
