#include <lrf/properties.hh>

#include <lrf/aut.hh>
#include <lrf/companion.hh>
#include <lrf/documents.hh>
#include <lrf/enumeration.hh>
#include <lrf/lattice.hh>
#include <lrf/ordinal_gallery.hh>
#include <lrf/progress.hh>
#include <lrf/sampling.hh>
#include <lrf/stratification.hh>
#include <lrf/upto_checker.hh>

#include <algorithm>
#include <json.hpp>
#include <map>
#include <memory>

namespace lrf
{
  bool verify_report::passed() const
  {
    return std::all_of(results.begin(), results.end(),
                       [](const property_result& r) {
                         return r.violations == 0;
                       });
  }

  namespace
  {
    class suite
    {
    public:
      suite(std::uint64_t seed, std::size_t samples)
        : rng_(seed), samples_(samples)
      {
        report_.seed = seed;
        report_.samples = samples;
      }

      // Registers a property in output order.
      property_result& prop(const std::string& name)
      {
        auto it = index_.find(name);
        if (it != index_.end())
          return report_.results[it->second];
        index_.emplace(name, report_.results.size());
        report_.results.push_back({name, 0, 0, {}});
        return report_.results.back();
      }

      template <class Describe>
      void check(const std::string& name, bool ok, Describe&& describe)
      {
        auto& p = prop(name);
        ++p.checked;
        if (!ok && p.violations++ == 0)
          p.first_violation = describe();
      }

      void check(const std::string& name, bool ok)
      {
        check(name, ok, [] { return std::string("violated"); });
      }

      std::size_t scaled(std::size_t divisor) const
      {
        return std::max<std::size_t>(1, samples_ / divisor);
      }

      std::size_t uniform(std::size_t lo, std::size_t hi)
      {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
      }

      double density() { return 0.2 + 0.1 * double(uniform(0, 4)); }

      lts system(std::size_t max_states, std::size_t max_labels)
      {
        return random_lts(rng_, uniform(1, max_states),
                          uniform(1, max_labels), density());
      }

      void lts_core();
      void stratification();
      void companion();
      void upto();
      void gallery();
      void lattice();
      void bridge();

      verify_report take() { return std::move(report_); }

      rng_t rng_;

    private:
      std::size_t samples_;
      verify_report report_;
      std::map<std::string, std::size_t> index_;
    };

    std::string show(const lts& sys, const relation& r)
    {
      return format_relation(sys, r);
    }

    void suite::lts_core()
    {
      for (std::size_t i = 0; i < samples_; ++i)
        {
          auto sys = system(4, 2);
          const auto n = sys.n_states();
          auto s = random_relation(rng_, n, density());
          auto largest = largest_progressing_to(sys, s);
          auto r = random_subrelation(rng_, largest, 0.7);

          auto r_small = random_subrelation(rng_, r, 0.6);
          auto s_big = random_superrelation(rng_, s, 0.3);
          check("progress.monotone", progresses(sys, r_small, s_big),
                [&] { return show(sys, r_small) + " !> " + show(sys, s_big); });

          auto r2 = random_subrelation(rng_, largest, 0.5);
          check("progress.union_closure", progresses(sys, r | r2, s),
                [&] { return show(sys, r | r2); });

          auto any = random_relation(rng_, n, density());
          auto diag = progresses_to(sys, any, s);
          check("progress.iff_subset_largest",
                diag.holds == relation_subset(any, largest),
                [&] { return show(sys, any) + " vs " + show(sys, s); });
          check("progress.diagnosis_consistent",
                diag.holds == progresses(sys, any, s)
                  && diag.holds == diag.violations.empty());

          check("io.aut_roundtrip", parse_aut(render_aut(sys)) == sys,
                [&] { return render_aut(sys); });
          std::string pair_lines;
          any.for_each_pair([&](state_t p, state_t q) {
            pair_lines += sys.state_name(p) + " " + sys.state_name(q) + "\n";
          });
          check("io.relation_roundtrip", parse_relation(pair_lines, sys) == any,
                [&] { return pair_lines; });
        }

      for (std::size_t i = 0; i < scaled(50); ++i)
        {
          auto sys = system(max_enumeration_states, 2);
          auto seq = compute_strata(sys);
          auto targets = seq.strata();
          targets.push_back(random_relation(rng_, sys.n_states(), density()));
          for (const auto& s : targets)
            check("progress.characterization",
                  largest_progressing_to(sys, s)
                    == union_of_progressing(sys, s),
                  [&] { return render_aut(sys) + " s=" + show(sys, s); });
        }
    }

    void suite::stratification()
    {
      for (std::size_t i = 0; i < scaled(5); ++i)
        {
          auto sys = system(6, 2);
          const auto n = sys.n_states();
          auto seq = compute_strata(sys);
          const auto& st = seq.strata();
          auto where = [&] { return render_aut(sys); };

          check("strata.base_full", st.front() == relation::full(n), where);
          check("strata.epsilon_bound", seq.epsilon() <= n * n, where);
          for (std::size_t k = 0; k + 1 < st.size(); ++k)
            {
              check("strata.strictly_decreasing",
                    relation_subset(st[k + 1], st[k]) && st[k + 1] != st[k],
                    where);
              check("strata.successor_progresses",
                    progresses(sys, st[k + 1], st[k]), where);
            }
          for (std::size_t j = 0; j < st.size(); ++j)
            for (std::size_t k = j; k < st.size() + 2; ++k)
              check("strata.monotone_in_index",
                    relation_subset(stratum(seq, k), stratum(seq, j)), where);
          for (const auto& s : st)
            check("strata.equivalence", is_equivalence(s), where);
          const auto& top = bisimilarity(seq);
          check("strata.fixpoint", largest_progressing_to(sys, top) == top,
                where);
          check("strata.self_progression", progresses(sys, top, top), where);
        }

      for (std::size_t i = 0; i < scaled(50); ++i)
        {
          auto sys = system(max_enumeration_states, 2);
          check("strata.bisim_enumeration",
                bisimilarity(compute_strata(sys))
                  == union_of_self_progressing(sys),
                [&] { return render_aut(sys); });
        }
    }

    void suite::companion()
    {
      const auto systems = scaled(20);
      const auto per_system = std::max<std::size_t>(1, samples_ / systems);
      for (std::size_t i = 0; i < systems; ++i)
        {
          auto sys = system(5, 2);
          const auto n = sys.n_states();
          auto seq = compute_strata(sys);
          const auto& bisim = bisimilarity(seq);
          auto cat = catalog(sys, seq);
          std::vector<std::pair<relation, relation>> samples;

          for (std::size_t j = 0; j < per_system; ++j)
            {
              auto [r, s] = respectful_sample(rng_, sys, density());
              auto lr = lrf(seq, r);
              auto ls = lrf(seq, s);
              check("lrf.respectful",
                    relation_subset(lr, ls) && progresses(sys, lr, ls),
                    [&] { return show(sys, r) + " / " + show(sys, s); });
              samples.emplace_back(std::move(r), std::move(s));

              auto big = random_relation(rng_, n, density());
              auto small = random_subrelation(rng_, big, 0.5);
              check("lrf.monotone",
                    relation_subset(lrf(seq, small), lrf(seq, big)),
                    [&] { return show(sys, small) + " / " + show(sys, big); });

              auto sound = random_subrelation(rng_, bisim, 0.5);
              check("lrf.sound_fixpoint", lrf(seq, sound) == bisim,
                    [&] { return show(sys, sound); });

              check("lrf.idempotent", lrf(seq, lrf(seq, big)) == lrf(seq, big),
                    [&] { return show(sys, big); });
              check("lrf.index_route",
                    lrf(seq, big) == stratum(seq, lrf_index(seq, big)),
                    [&] { return show(sys, big); });

              for (const auto& f : cat)
                check("lrf.largest", relation_subset(f(big), lrf(seq, big)),
                      [&] { return f.name + " at " + show(sys, big); });
            }

          for (const auto& f : cat)
            {
              auto v = is_respectful_on_samples(sys, f, samples);
              check("catalog.respectful_on_samples", v.holds_on_samples,
                    [&] { return f.name; });
            }
        }
    }

    void suite::upto()
    {
      for (std::size_t i = 0; i < scaled(20); ++i)
        {
          auto sys = system(4, 2);
          auto seq = compute_strata(sys);
          auto cat = catalog(sys, seq);
          for (std::size_t j = 0; j < 5; ++j)
            {
              auto r = j % 2 ? random_subrelation(rng_, bisimilarity(seq), 0.5)
                             : random_relation(rng_, sys.n_states(), 0.2);
              bool any_catalog = false;
              for (const auto& f : cat)
                {
                  auto rep = check_upto(sys, seq, r, f);
                  check("upto.soundness",
                        rep.conclusion != conclusion::contained_in_bisimilarity
                          || rep.cross_check,
                        [&] { return f.name + " at " + show(sys, r); });
                  any_catalog |= rep.progression_holds;
                }
              auto comp = check_companion(sys, seq, r);
              check("upto.soundness",
                    comp.conclusion != conclusion::contained_in_bisimilarity
                      || comp.cross_check,
                    [&] { return "lrf at " + show(sys, r); });
              check("upto.maximality",
                    !any_catalog
                      || comp.conclusion
                           == conclusion::contained_in_bisimilarity,
                    [&] { return show(sys, r); });
            }
        }
    }

    void suite::gallery()
    {
      for (std::size_t n = 0; n <= 8; ++n)
        {
          auto v = verify_gallery(n);
          check("gallery.membership", v.passed,
                [&] { return v.first_discrepancy; });
          check("gallery.epsilon", v.epsilon == n,
                [&] { return "T_" + std::to_string(n) + " epsilon "
                             + std::to_string(v.epsilon); });
        }
    }

    void suite::lattice()
    {
      std::vector<std::pair<std::string, finite_lattice>> lattices{
        {"chain1", chain_lattice(1)},     {"chain2", chain_lattice(2)},
        {"chain3", chain_lattice(3)},     {"chain4", chain_lattice(4)},
        {"chain5", chain_lattice(5)},     {"diamond", diamond_lattice()},
        {"powerset2", powerset_lattice(2)}, {"pentagon", pentagon_lattice()},
      };
      separation_census total;
      std::size_t separating = 0;
      std::size_t progressions = 0;
      for (const auto& [name, l] : lattices)
        for (std::size_t i = 0; i < scaled(50); ++i)
          {
            auto prog = random_progression(rng_, l, density() / 2);
            auto where = [&, &l = l] {
              return name + " " + format_relation(l.names(), prog.rel());
            };
            auto chain = z_chain(l, prog);
            for (std::size_t k = 0; k + 1 < chain.zs.size(); ++k)
              {
                check("lattice.chain_decreasing",
                      l.leq(chain.zs[k + 1], chain.zs[k]), where);
                check("lattice.chain_progression",
                      prog.rel().contains(chain.zs[k + 1], chain.zs[k]),
                      where);
              }
            auto comp = companion_table(l, chain);
            check("lattice.companion_monotone", is_monotone(l, comp), where);
            check("lattice.companion_r_monotone",
                  is_R_monotone(l, prog.rel(), comp), where);
            check("lattice.companion_compatible", is_compatible(l, prog, comp),
                  where);

            auto rm = brute_force_largest(l, prog, largest_mode::r_monotone);
            auto co = brute_force_largest(l, prog, largest_mode::compatible);
            check("lattice.coincidence",
                  rm.largest == comp && co.largest == comp, where);
            check("lattice.join_in_class",
                  rm.largest_in_class && co.largest_in_class, where);

            auto c = census_separation(l, prog);
            total.monotone += c.monotone;
            total.r_monotone_only += c.r_monotone_only;
            total.compatible_only += c.compatible_only;
            total.both += c.both;
            separating += (c.r_monotone_only + c.compatible_only) > 0;
            ++progressions;
          }
      report_.findings.emplace_back("separation.progressions_sampled",
                                    progressions);
      report_.findings.emplace_back("separation.progressions_with_witness",
                                    separating);
      report_.findings.emplace_back("separation.r_monotone_not_compatible",
                                    total.r_monotone_only);
      report_.findings.emplace_back("separation.compatible_not_r_monotone",
                                    total.compatible_only);
    }

    void suite::bridge()
    {
      std::vector<lts> systems = all_systems(1, 2);
      for (auto& sys : all_systems(2, 1))
        systems.push_back(std::move(sys));
      systems.push_back(build_T(2).system);

      for (const auto& sys : systems)
        {
          const auto n = sys.n_states();
          auto image = lts_to_lattice(sys);
          const auto& l = image.lattice;
          auto seq = compute_strata(sys);
          auto chain = z_chain(l, image.progression);
          auto where = [&] { return render_aut(sys); };

          bool chain_ok = chain.zs.size() == seq.strata().size();
          for (std::size_t k = 0; chain_ok && k < chain.zs.size(); ++k)
            chain_ok = relation_of(n, chain.zs[k]) == seq.strata()[k];
          check("bridge.chain_eq_strata", chain_ok, where);

          for (element_t x = 0; x < l.size(); ++x)
            {
              auto r = relation_of(n, x);
              check("bridge.companion_eq_lrf",
                    companion_at(l, chain, x) == element_of(lrf(seq, r)),
                    where);
              check("bridge.s_eq_largest_progressing",
                    s_of(l, image.progression, x)
                      == element_of(largest_progressing_to(sys, r)),
                    where);
            }
        }
    }
  }

  verify_report run_property_suite(std::uint64_t seed, std::size_t samples)
  {
    suite s(seed, samples);
    s.lts_core();
    s.stratification();
    s.companion();
    s.upto();
    s.gallery();
    s.lattice();
    s.bridge();
    return s.take();
  }

  std::string to_json(const verify_report& report)
  {
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    j["passed"] = report.passed();
    auto& props = j["properties"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results)
      {
        nlohmann::ordered_json p;
        p["name"] = r.name;
        p["checked"] = r.checked;
        p["violations"] = r.violations;
        if (!r.first_violation.empty())
          p["first_violation"] = r.first_violation;
        props.push_back(std::move(p));
      }
    auto& findings = j["findings"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.findings)
      findings[k] = v;
    return j.dump(2) + "\n";
  }
}
