#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrf
{
  /// Base class of every error raised by the library.
  class error : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  /// Two relations (or a relation and a system) disagree on the number of
  /// states they range over.
  class dimension_mismatch : public error
  {
  public:
    dimension_mismatch(std::size_t expected, std::size_t got)
      : error("dimension mismatch: expected " + std::to_string(expected)
              + " states, got " + std::to_string(got))
    {
    }
  };

  /// Malformed input text.  `line` is 1-based, 0 when not applicable.
  class parse_error : public error
  {
  public:
    parse_error(std::size_t line, const std::string& what)
      : error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
  };

  /// An exhaustive enumeration was requested on an input above its hard cap.
  class enumeration_limit : public error
  {
  public:
    using error::error;
  };
}
