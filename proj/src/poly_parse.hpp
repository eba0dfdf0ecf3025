#pragma once

#include "lexer.hpp"
#include "smult/polyring.hpp"

namespace smult::detail {

/// expr := term {(+|-) term}; term := unary {(*|/) unary};
/// unary := -unary | power; power := primary [^ INT]; primary := INT | VAR | (expr)
Polynomial parse_poly_expr(TokenStream& in, const RingPtr& ring);

}  // namespace smult::detail
