#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpg
{
  /// Base class of every error raised by the library.
  class error : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  /// A restriction produced a vertex without successors.
  class dead_end_error : public error
  {
  public:
    using error::error;
  };

  /// An explicit product exceeded the configured state budget.
  class capacity_error : public error
  {
  public:
    using error::error;
  };

  /// Checked 64-bit weight arithmetic overflowed.
  class overflow_error : public error
  {
  public:
    using error::error;
  };

  /// Strategy extraction was requested from a vertex the player does not win.
  class not_winning_error : public error
  {
  public:
    using error::error;
  };

  /// A structural requirement of an input object is violated.
  class validation_error : public error
  {
  public:
    using error::error;
  };

  class invalid_countdown_error : public validation_error
  {
  public:
    using validation_error::validation_error;
  };

  class parse_error : public error
  {
  public:
    parse_error(std::size_t line, std::size_t column, const std::string& what)
      : error("line " + std::to_string(line) + ", column "
              + std::to_string(column) + ": " + what),
        line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
  };
}
