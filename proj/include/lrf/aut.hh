#pragma once

#include <lrf/lts.hh>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lrf
{
  /// Aldebaran `.aut` text:
  ///
  ///   des (initial, transition_count, state_count)
  ///   (source, "label", target)      one line per transition
  ///
  /// Whitespace around tokens is ignored and blank lines are skipped.  A
  /// quoted label runs to the last double quote on its line, so labels may
  /// contain commas and quotes.  Unquoted labels are accepted and trimmed.
  struct aut_line
  {
    std::size_t source;
    std::string label;
    std::size_t target;
  };

  struct aut_document
  {
    std::size_t initial_state = 0;
    std::size_t transition_count = 0;
    std::size_t state_count = 0;
    std::vector<aut_line> body;
  };

  /// Throws parse_error (with line number) on a malformed header, a count
  /// mismatch, an index out of range, or an unterminated quote.
  aut_document parse_aut_document(std::string_view text);

  lts to_lts(const aut_document& doc);

  lts parse_aut(std::string_view text);

  /// States are written by index in canonical transition order.
  std::string render_aut(const lts& sys);
}
