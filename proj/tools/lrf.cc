// Command-line front end: strata, bisimilarity, LRF, up-to proof checking,
// the ordinal gallery, lattice companions and the property suite.

#include <lrf/aut.hh>
#include <lrf/companion.hh>
#include <lrf/documents.hh>
#include <lrf/dot.hh>
#include <lrf/error.hh>
#include <lrf/lattice.hh>
#include <lrf/ordinal_gallery.hh>
#include <lrf/properties.hh>
#include <lrf/render.hh>
#include <lrf/stratification.hh>
#include <lrf/upto_checker.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

namespace
{
  constexpr int exit_ok = 0;
  constexpr int exit_failed = 1;
  constexpr int exit_invalid = 2;

  std::string read_input(const std::string& path)
  {
    if (path == "-")
      return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw lrf::error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
  }

  lrf::lts load_lts(const std::string& path)
  {
    return lrf::parse_aut(read_input(path));
  }
}

int main(int argc, char** argv)
{
  CLI::App app{"Stratified bisimilarity, the largest respectful function, "
               "and up-to proof checking on finite LTSs"};
  app.require_subcommand(1);

  std::string lts_path, rel_path, lattice_path, prog_path, fn_name = "lrf";
  std::size_t gallery_n = 0, samples = 1000;
  std::uint64_t seed = 42;
  bool gallery_verify = false, close_seed = false;

  auto* strata = app.add_subcommand("strata", "print every stratum and epsilon");
  strata->add_option("lts", lts_path, ".aut file, '-' for stdin")->required();

  auto* bisim = app.add_subcommand("bisim", "print bisimilarity");
  bisim->add_option("lts", lts_path, ".aut file")->required();

  auto* comp = app.add_subcommand("companion", "print LRF(R) and its index");
  comp->add_option("lts", lts_path, ".aut file")->required();
  comp->add_option("relation", rel_path, "relation, JSON or \"p q\" lines")->required();

  auto* upto = app.add_subcommand("check-upto",
                                  "check R progresses to f(R)");
  upto->add_option("lts", lts_path, ".aut file")->required();
  upto->add_option("relation", rel_path, "relation, JSON or \"p q\" lines")->required();
  upto->add_option("--fn", fn_name, "up-to function (default lrf)");

  auto* gallery = app.add_subcommand("gallery", "emit or verify T_n");
  gallery->add_option("n", gallery_n, "largest ordinal")->required();
  gallery->add_flag("--verify", gallery_verify, "check the strata of T_n");

  auto* lattice = app.add_subcommand("lattice-companion",
                                     "print the z-chain and companion table");
  lattice->add_option("lattice", lattice_path, "lattice JSON")->required();
  lattice->add_option("progression", prog_path, "element pairs, JSON or text")->required();
  lattice->add_flag("--close", close_seed,
                    "close the relation to a progression first");

  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
  verify->add_option("--samples", samples, "samples per property")->capture_default_str();

  auto* dot = app.add_subcommand("export-dot", "render the LTS as DOT");
  dot->add_option("lts", lts_path, ".aut file")->required();

  try
    {
      app.parse(argc, argv);
    }
  catch (const CLI::CallForHelp& e)
    {
      return app.exit(e);
    }
  catch (const CLI::ParseError& e)
    {
      app.exit(e);
      return exit_invalid;
    }

  try
    {
      if (strata->parsed())
        {
          auto sys = load_lts(lts_path);
          std::cout << lrf::render_strata(sys, lrf::compute_strata(sys));
          return exit_ok;
        }
      if (bisim->parsed())
        {
          auto sys = load_lts(lts_path);
          auto seq = lrf::compute_strata(sys);
          std::cout << "epsilon = " << seq.epsilon() << "\n"
                    << "bisimilarity = "
                    << lrf::format_relation(sys, lrf::bisimilarity(seq))
                    << "\n";
          return exit_ok;
        }
      if (comp->parsed())
        {
          auto sys = load_lts(lts_path);
          auto r = lrf::parse_relation(read_input(rel_path), sys);
          auto seq = lrf::compute_strata(sys);
          std::cout << "index = " << lrf::lrf_index(seq, r) << "\n"
                    << "lrf = " << lrf::format_relation(sys, lrf::lrf(seq, r))
                    << "\n";
          return exit_ok;
        }
      if (upto->parsed())
        {
          auto sys = load_lts(lts_path);
          auto doc = lrf::parse_relation_document(read_input(rel_path), sys);
          auto seq = std::make_shared<const lrf::strata_sequence>(
            lrf::compute_strata(sys));
          std::optional<lrf::upto_function> f;
          if (fn_name == "lrf")
            f = lrf::lrf_function(seq);
          auto cat = lrf::catalog(sys, *seq);
          for (const auto& g : cat)
            if (g.name == fn_name)
              f = g;
          if (!f)
            {
              std::cerr << "unknown function '" << fn_name
                        << "'; known: lrf";
              for (const auto& g : cat)
                std::cerr << ", " << g.name;
              std::cerr << "\n";
              return exit_invalid;
            }
          auto report = lrf::check_upto(sys, *seq, doc.pairs, *f, doc.name);
          std::cout << lrf::render_report(sys, report);
          return report.conclusion
                     == lrf::conclusion::contained_in_bisimilarity
                   ? exit_ok
                   : exit_failed;
        }
      if (gallery->parsed())
        {
          if (!gallery_verify)
            {
              std::cout << lrf::render_aut(lrf::build_T(gallery_n).system);
              return exit_ok;
            }
          auto v = lrf::verify_gallery(gallery_n);
          std::cout << "T_" << gallery_n << ": "
                    << (v.passed ? "pass" : "fail: " + v.first_discrepancy)
                    << " (epsilon = " << v.epsilon << ")\n";
          return v.passed ? exit_ok : exit_failed;
        }
      if (lattice->parsed())
        {
          auto l = lrf::parse_lattice(read_input(lattice_path));
          auto rel = lrf::parse_element_relation(read_input(prog_path), l);
          auto prog = close_seed ? lrf::close_to_progression(l, std::move(rel))
                                 : lrf::lattice_progression::make(l, std::move(rel));
          std::cout << lrf::render_lattice_companion(l, lrf::z_chain(l, prog));
          return exit_ok;
        }
      if (verify->parsed())
        {
          auto report = lrf::run_property_suite(seed, samples);
          std::cout << lrf::to_json(report);
          return report.passed() ? exit_ok : exit_failed;
        }
      if (dot->parsed())
        {
          std::cout << lrf::render_dot(load_lts(lts_path));
          return exit_ok;
        }
    }
  catch (const std::exception& e)
    {
      std::cerr << "error: " << e.what() << "\n";
      return exit_invalid;
    }
  return exit_invalid;
}
