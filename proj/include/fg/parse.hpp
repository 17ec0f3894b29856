#pragma once

#include <stdexcept>
#include <string>

#include "fg/word.hpp"

namespace fg {

// Word text syntax:
//   lowercase a-z        generators 1..26
//   uppercase A-Z        their inverses
//   u^k                  integer power of the preceding letter or group
//   ( ... )              grouping
//   [u,v]                commutator u v u^-1 v^-1
//   whitespace ignored
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " (column " + std::to_string(column) + ")"),
        column(column) {}
  std::size_t column;  // 1-based
};

Word parse_word(const std::string& text, int rank);

}  // namespace fg
