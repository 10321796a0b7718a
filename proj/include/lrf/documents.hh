#pragma once

#include <lrf/lattice.hh>
#include <lrf/lts.hh>
#include <lrf/relation.hh>

#include <span>
#include <string>
#include <string_view>

namespace lrf
{
  /// Relations are read from either
  ///
  ///   * JSON: {"name": "R", "pairs": [["p", "q"], [0, 1], ...]}, or
  ///   * text: one "p q" pair per line, '#' starts a comment.
  ///
  /// Endpoints are state names, or indices when no state has that name.
  /// Duplicate pairs collapse.
  struct relation_document
  {
    std::string name;
    relation pairs;
  };

  relation_document parse_relation_document(std::string_view text,
                                            const lts& sys);
  relation parse_relation(std::string_view text, const lts& sys);

  /// Same formats, with endpoints resolved against lattice element names.
  relation parse_element_relation(std::string_view text,
                                  const finite_lattice& l);

  /// {"elements": [...], "order": "cover" | "full", "pairs": [[a, b], ...]}
  /// where (a, b) means a <= b.  Cover pairs are closed reflexively and
  /// transitively before validation; "full" pairs are validated as given
  /// after adding reflexivity.  Axiom violations surface as
  /// lattice_axiom_error.
  finite_lattice parse_lattice(std::string_view text);

  /// "{(p,q), ...}" with state names, sorted by index.
  std::string format_relation(std::span<const std::string> names,
                              const relation& r);
  std::string format_relation(const lts& sys, const relation& r);
}
