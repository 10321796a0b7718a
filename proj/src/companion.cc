#include <lrf/companion.hh>

#include <lrf/error.hh>

namespace lrf
{
  std::size_t lrf_index(const strata_sequence& seq, const relation& r)
  {
    const auto& strata = seq.strata();
    require_same_dimension(strata.front(), r);
    for (std::size_t k = 1; k < strata.size(); ++k)
      if (!relation_subset(r, strata[k]))
        return k - 1;
    return seq.epsilon();
  }

  relation lrf(const strata_sequence& seq, const relation& r)
  {
    require_same_dimension(seq.strata().front(), r);
    auto out = relation::full(r.n_states());
    for (const auto& s : seq.strata())
      if (relation_subset(r, s))
        out &= s;
    return out;
  }

  upto_function lrf_function(std::shared_ptr<const strata_sequence> seq)
  {
    return {"lrf", [seq](const relation& r) { return lrf(*seq, r); }};
  }

  std::vector<upto_function> catalog(const lts& sys,
                                     const strata_sequence& seq)
  {
    if (seq.n_states() != sys.n_states())
      throw dimension_mismatch(sys.n_states(), seq.n_states());
    auto bisim = std::make_shared<const relation>(bisimilarity(seq));

    std::vector<upto_function> base{
      {"identity", [](const relation& r) { return r; }},
      {"const_bisim", [bisim](const relation&) { return *bisim; }},
      {"upto_bisim",
       [bisim](const relation& r) {
         return relation_compose(relation_compose(*bisim, r), *bisim);
       }},
      {"union_bisim", [bisim](const relation& r) { return r | *bisim; }},
    };

    std::vector<upto_function> out = base;
    for (const auto& f : base)
      for (const auto& g : base)
        out.push_back({f.name + "." + g.name,
                       [f = f.eval, g = g.eval](const relation& r) {
                         return f(g(r));
                       }});
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j)
        out.push_back({base[i].name + "+" + base[j].name,
                       [f = base[i].eval, g = base[j].eval](
                         const relation& r) { return f(r) | g(r); }});
    return out;
  }

  respectfulness_verdict
  is_respectful_on_samples(const lts& sys, const upto_function& f,
                           std::span<const std::pair<relation, relation>>
                             samples)
  {
    respectfulness_verdict out;
    for (const auto& [r, s] : samples)
      {
        if (!relation_subset(r, s) || !progresses(sys, r, s))
          {
            ++out.skipped;
            continue;
          }
        ++out.checked;
        if (out.counterexample)
          continue;

        auto fr = f(r);
        auto fs = f(s);
        if (!relation_subset(fr, fs))
          out.counterexample = respectfulness_counterexample{
            r, s, respectfulness_clause::inclusion, {}};
        else if (auto diag = progresses_to(sys, fr, fs); !diag.holds)
          out.counterexample = respectfulness_counterexample{
            r, s, respectfulness_clause::progression, std::move(diag)};
      }
    out.holds_on_samples = !out.counterexample;
    return out;
  }

  largest_verdict check_lrf_largest(const strata_sequence& seq,
                                    const upto_function& f,
                                    std::span<const relation> rs)
  {
    largest_verdict out;
    for (const auto& r : rs)
      {
        ++out.checked;
        if (!relation_subset(f(r), lrf(seq, r)))
          {
            ++out.violations;
            if (!out.first_violation)
              out.first_violation = r;
          }
      }
    out.holds = out.violations == 0;
    return out;
  }
}
