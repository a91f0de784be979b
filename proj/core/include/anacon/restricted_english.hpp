// Restricted-English concrete syntax for CL. Every clause is one bracketed
// template (ACT is an action, CL a clause):
//
//   ( It is mandatory to ( ACT ) )
//   ( It is mandatory to ( ACT ) if not ( ACT ) then CL )
//   ( It is prohibited to ( ACT ) )
//   ( It is prohibited to ( ACT ) if ( ACT ) then CL )
//   ( It is permitted to ( ACT ) )
//   ( If ( ACT ) then CL )
//   ( ( Always | After | When | Before ) CL )          -- [1*]CL
//   ( CL and CL [and CL ...] )
//   ( CL xor CL )
//   ( trivially satisfied )                          -- T
//   ( contract violated )                            -- _|_
//
//   ACT := NAME | 1 | 0 | ( ACT ) | not ACT | ACT any-number-of-times
//        | ACT and ACT | ACT followed-by ACT | ACT or ACT
//
// Inside ACT, `and` (&) binds tighter than `followed-by` (.), which binds
// tighter than `or` (+). A NAME containing `_and_` / `_or_` that is not itself
// a known action is split at those markers, left to right.
//
// Linearization always writes `Always` for the temporal form, so the four
// temporal words are interchangeable on input only.

#ifndef ANACON_RESTRICTED_ENGLISH_HPP
#define ANACON_RESTRICTED_ENGLISH_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "anacon/clause.hpp"

namespace anacon {

struct EnglishParseOptions {
  /// Action names that are never split at `_and_` / `_or_`.
  const std::set<std::string>* lexicon = nullptr;
  /// Line number reported for the first line of `text`.
  std::size_t first_line = 1;
};

/// Parses exactly one clause template. Throws ParseError.
Clause parse_re(std::string_view text, const EnglishParseOptions& options = {});

std::string linearize_re(const Clause& c);
std::string linearize_re_action(const ActionExpr& e);

}  // namespace anacon

#endif  // ANACON_RESTRICTED_ENGLISH_HPP
