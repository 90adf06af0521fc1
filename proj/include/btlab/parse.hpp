#pragma once

#include <string_view>

#include "btlab/rational.hpp"

namespace btlab {

struct ParseError : std::invalid_argument {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

/// Expression grammar over F(t): integers, `t`, `+ - * / ^ ( )`.
/// Exponents are integers and may be negative (t^-2).
RationalFunction parse_rational_function(Field f, std::string_view text);

}  // namespace btlab
