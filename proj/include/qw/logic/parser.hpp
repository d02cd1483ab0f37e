#pragma once

#include <string_view>

#include "qw/logic/formula.hpp"

namespace qw {

// Reads one formula of the S-expression DSL. Throws ParseError with the
// line and column of the offending token.
Formula parse_formula(std::string_view text);

bool is_identifier(std::string_view s);

}  // namespace qw
