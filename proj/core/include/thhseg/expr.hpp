#pragma once

#include "thhseg/element.hpp"

#include <string_view>

namespace thhseg {

/// Parses a class expression into the given algebra.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [int ['*']] factor ('*' factor)* | int
///   factor := name ['^' exp] | 's(' name ')' ['^' exp]
///   name   := letters digits*
///   exp    := ['-'] digits | '{' ['-'] digits '}'
///
/// Whitespace is ignored. Throws ParseError (with the byte offset) on bad
/// syntax and ResolutionError for a generator the algebra does not know.
Element parse_class(const GradedAlgebra& algebra, std::string_view text);

} // namespace thhseg
