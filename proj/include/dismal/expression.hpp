#pragma once

#include <optional>
#include <string_view>

#include "dismal/number.hpp"

namespace dismal {

/// Evaluates expressions such as "169+248" or "(1101@2)*(101@2)".
///
/// '+' is dismal addition, '*' dismal multiplication (binding tighter), and
/// parentheses group. Numbers without an "@b" suffix take the one base that
/// appears explicitly in the expression, else `default_base`, else base 10.
/// Throws ParseError on malformed input and BaseMismatch when two explicit
/// bases differ.
Number evaluate(std::string_view expr, std::optional<Base> default_base = std::nullopt);

}  // namespace dismal
