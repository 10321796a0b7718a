#include <lrf/aut.hh>
#include <lrf/documents.hh>
#include <lrf/dot.hh>
#include <lrf/error.hh>
#include <lrf/ordinal_gallery.hh>
#include <lrf/render.hh>
#include <lrf/sampling.hh>
#include <lrf/upto_checker.hh>

#include "fixtures.hh"

#include <doctest.h>

using namespace lrf;
using fixture::rel;

namespace
{
  std::size_t error_line(std::string_view text)
  {
    try
      {
        parse_aut(text);
      }
    catch (const parse_error& e)
      {
        return e.line();
      }
    FAIL("expected parse_error for: " << text);
    return 0;
  }
}

TEST_CASE("parse_aut examples")
{
  CHECK(parse_aut("des (0,1,2)\n(1,\"t\",0)\n") == build_T(1).system);

  auto one = parse_aut("des (0,0,1)\n");
  CHECK(one.n_states() == 1);
  CHECK(one.n_transitions() == 0);

  CHECK(parse_aut("des (0,3,3)\n(1,\"t\",0)\n(2,\"t\",0)\n(2,\"t\",1)\n")
        == build_T(2).system);
}

TEST_CASE("parse_aut is whitespace tolerant and keeps label text")
{
  auto sys = parse_aut("\n  des ( 1 , 3 , 2 )  \r\n"
                       "( 0 , \"send, ack\" , 1 )\n"
                       "\n"
                       "(1,\"say \"hi\"\",0)\n"
                       "(1, tau ,1)\n");
  CHECK(sys.initial_state() == 1);
  REQUIRE(sys.n_labels() == 3);
  CHECK(sys.find_label("send, ack"));
  CHECK(sys.find_label("say \"hi\""));
  CHECK(sys.find_label("tau"));
  CHECK(parse_aut(render_aut(sys)) == sys);
}

TEST_CASE("parse_aut errors carry line numbers")
{
  CHECK(error_line("") == 1);
  CHECK(error_line("dex (0,0,1)\n") == 1);
  CHECK(error_line("des (0,0)\n") == 1);
  CHECK(error_line("des (0,x,1)\n") == 1);
  CHECK(error_line("des (0,2,2)\n(0,\"a\",1)\n") == 2);
  CHECK(error_line("des (0,1,2)\n(0,\"a\",1)\n(1,\"a\",0)\n") == 3);
  CHECK(error_line("des (0,2,2)\n(0,\"a\",1)\n(0,\"a\",5)\n") == 3);
  CHECK(error_line("des (0,1,2)\n\n(0,\"a,1)\n") == 3);
  CHECK(error_line("des (0,1,2)\n(0,\"\",1)\n") == 2);
  CHECK(error_line("des (3,0,2)\n") == 1);
}

TEST_CASE("aut round trip on random systems")
{
  rng_t rng(59);
  for (int i = 0; i < 200; ++i)
    {
      auto sys = random_lts(rng, 1 + i % 6, 1 + i % 3, 0.3);
      CHECK(parse_aut(render_aut(sys)) == sys);
    }
}

TEST_CASE("parse_relation text and JSON")
{
  auto t2 = build_T(2).system;
  CHECK(parse_relation("", t2) == relation(3));
  CHECK(parse_relation("1 2\n", t2) == rel(3, {{1, 2}}));
  CHECK(parse_relation("# comment\n1 2 # trailing\n1 2\n0 0\n", t2)
        == rel(3, {{1, 2}, {0, 0}}));
  CHECK_THROWS_AS(parse_relation("1\n", t2), parse_error);
  CHECK_THROWS_AS(parse_relation("1 7\n", t2), parse_error);

  auto sys = fixture::loop_vs_cycle();
  auto doc = parse_relation_document(
    R"({"name": "P", "pairs": [["p", "q1"], [0, 2], ["p", "q1"]]})", sys);
  CHECK(doc.name == "P");
  CHECK(doc.pairs == rel(3, {{0, 1}, {0, 2}}));
  CHECK(parse_relation("p q2\n", sys) == rel(3, {{0, 2}}));
  CHECK_THROWS_AS(parse_relation(R"({"pairs": [["p"]]})", sys), parse_error);
  CHECK_THROWS_AS(parse_relation(R"({"pairs": [["p", "zz"]]})", sys),
                  parse_error);
  CHECK_THROWS_AS(parse_relation("{ not json", sys), parse_error);
}

TEST_CASE("parse_lattice")
{
  auto m2 = parse_lattice(R"({"elements": ["bot", "x", "y", "top"],
                              "order": "cover",
                              "pairs": [["bot", "x"], ["bot", "y"],
                                        ["x", "top"], ["y", "top"]]})");
  CHECK(m2.size() == 4);
  CHECK(m2.leq(0, 3));
  CHECK(m2.join(1, 2) == 3);
  CHECK(m2.meet(1, 2) == 0);

  auto full = parse_lattice(R"({"elements": ["a", "b"], "order": "full",
                                "pairs": [["a", "b"]]})");
  CHECK(full.top() == 1);

  CHECK_THROWS_AS(parse_lattice(R"({"elements": ["bot", "x", "y"],
                                    "pairs": [["bot", "x"], ["bot", "y"]]})"),
                  lattice_axiom_error);
  CHECK_THROWS_AS(parse_lattice(R"({"elements": ["a"], "order": "weird"})"),
                  parse_error);
  CHECK_THROWS_AS(parse_lattice("[]"), parse_error);

  auto rel_on = parse_element_relation("bot top\nx top\n", m2);
  CHECK(rel_on == rel(4, {{0, 3}, {1, 3}}));
}

TEST_CASE("DOT rendering")
{
  auto dot = render_dot(build_T(2).system);
  CHECK(dot.find("digraph \"lts\" {") == 0);
  CHECK(dot.find("  2 -> 1 [label=\"t\"];\n") != std::string::npos);
  CHECK(dot.find("  0 [label=\"0\", shape=doublecircle];\n")
        != std::string::npos);

  lts_builder b;
  b.add_state("q\"x");
  b.add_transition(0, "a\\b", 0);
  auto odd = render_dot(b.build());
  CHECK(odd.find("label=\"q\\\"x\"") != std::string::npos);
  CHECK(odd.find("label=\"a\\\\b\"") != std::string::npos);
}

TEST_CASE("report and strata rendering")
{
  auto t2 = build_T(2).system;
  CHECK(format_relation(t2, rel(3, {{2, 1}, {0, 0}})) == "{(0,0), (2,1)}");
  CHECK(render_strata(t2, compute_strata(t2))
        == "~0 = {(0,0), (0,1), (0,2), (1,0), (1,1), (1,2), (2,0), (2,1), (2,2)}\n"
           "~1 = {(0,0), (1,1), (1,2), (2,1), (2,2)}\n"
           "~2 = {(0,0), (1,1), (2,2)}\n"
           "epsilon = 2\n");

  auto report = check_companion(t2, rel(3, {{1, 2}}));
  CHECK(render_report(t2, report)
        == "relation: R\n"
           "function: lrf (trusted)\n"
           "progression: fails (1 violations)\n"
           "  (1,2) right: 2 -t-> 1 unmatched\n"
           "conclusion: inconclusive\n"
           "cross_check: false\n");
}

TEST_CASE("lts_builder validation")
{
  lts_builder dup;
  dup.add_state("x");
  dup.add_state("x");
  CHECK_THROWS_AS(dup.build(), error);

  lts_builder range(2);
  range.add_transition(0, "a", 2);
  CHECK_THROWS_AS(range.build(), error);

  lts_builder empty_label(1);
  empty_label.add_transition(0, "", 0);
  CHECK_THROWS_AS(empty_label.build(), error);

  lts_builder canon(2);
  canon.add_transition(1, "b", 0);
  canon.add_transition(1, "a", 1);
  canon.add_transition(1, "b", 0);
  canon.add_transition(1, "a", 0);
  auto sys = canon.build();
  CHECK(sys.n_transitions() == 3);
  CHECK(sys.label(0) == "a");
  auto succ = sys.successors(1);
  CHECK(std::vector<transition>(succ.begin(), succ.end())
        == std::vector<transition>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(sys.successors(1, 1).size() == 1);
}
