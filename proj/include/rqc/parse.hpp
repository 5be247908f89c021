#pragma once

#include "rqc/formula.hpp"

#include <string_view>

namespace rqc {

/// Parses formula text. Grammar, loosest to tightest binding:
///
///     <->   (right-associative)
///     ->    (right-associative)
///     |     (n-ary)
///     &     (n-ary)
///     ! / not
///     atoms, true, false, ( ... )
///
/// Throws ParseError (with 1-based line/column and an expected-token hint)
/// on malformed or empty input.
Formula parse_formula(std::string_view text);

} // namespace rqc
