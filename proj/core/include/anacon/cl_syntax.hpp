// Symbolic (CLAN-style ASCII) concrete syntax for CL.
//
//   clause := ( clause ) | O ( act ) [_ clause] | F ( act ) [_ clause]
//           | P ( act ) | [ act ] clause | clause ^ clause
//           | clause (+) clause | T | _|_
//   act    := 0 | 1 | name | act & act | act . act | act + act
//           | ! act | act * | ( act )
//
// Action operators bind, tightest first: * ! & . +  (binary ones are
// left-associative). `(+)` binds tighter than `^`; a chain `a ^ b ^ c` is one
// n-ary conjunction. `/\` and the UTF-8 wedge are accepted for `^`.
//
// The printer emits the fully bracketed form with single spaces between
// tokens, e.g. `( [ ( g ) ] ( O ( a & b ) _ ( O ( pay_a_fine ) ) ) )`.

#ifndef ANACON_CL_SYNTAX_HPP
#define ANACON_CL_SYNTAX_HPP

#include <string>
#include <string_view>

#include "anacon/clause.hpp"

namespace anacon {

/// Throws LexicalError / ParseError with the offending position.
Clause parse_cl(std::string_view text);
ActionExpr parse_cl_action(std::string_view text);

std::string print_cl(const Clause& c);
std::string print_cl_action(const ActionExpr& e);

}  // namespace anacon

#endif  // ANACON_CL_SYNTAX_HPP
