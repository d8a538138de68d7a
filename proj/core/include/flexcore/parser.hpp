#pragma once

#include <string_view>

#include "flexcore/polynomial.hpp"

namespace flexcore {

/// Parses an expression over the given universe into canonical form.
///
/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := int ('/' uint)? | var | '(' expr ')'
///
/// Variable names are resolved against the universe; anything else is a
/// ParseError carrying the offending position. parse(print(p)) == p for
/// every canonical polynomial p.
Polynomial parse_polynomial(std::string_view text, const UniversePtr& universe);

}  // namespace flexcore
