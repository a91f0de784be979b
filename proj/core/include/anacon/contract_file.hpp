// Contract.txt: three sections introduced by header lines, in order.
//
//   DICTIONARY
//   pay_a_fine : Pay the fine for a breach
//   CONTRACT
//   ( It is mandatory to ( pay_a_fine ) )
//
//   ( If ( a ) then ( It is prohibited to ( b ) ) )
//   CONTRADICTION
//   open_the_check_in_desk # close_the_check_in_desk
//
// Contract clauses are restricted English, one per blank-line separated
// block. Lines starting with `%` are comments anywhere in the file.

#ifndef ANACON_CONTRACT_FILE_HPP
#define ANACON_CONTRACT_FILE_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "anacon/clause.hpp"

namespace anacon {

struct DictionaryEntry {
  std::string name;
  std::string description;
  std::size_t line = 0;
};

struct ContradictionEntry {
  std::string left;
  std::string right;
  std::size_t line = 0;
};

struct LineRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct ContractDocument {
  std::vector<DictionaryEntry> dictionary;
  std::vector<Clause> clauses;
  std::vector<LineRange> source_spans;  // parallel to clauses
  std::vector<ContradictionEntry> contradictions;

  /// Pairs with two non-empty names.
  MutexRelation mutex() const;
  /// Declared actions in dictionary order, duplicates and empty names dropped.
  std::vector<AtomicAction> alphabet() const;
  std::set<std::string> lexicon() const;
  /// The clauses conjoined (Top when there are none).
  Clause contract() const;
};

/// Splits sections and parses each line / clause. Structural problems and
/// clause syntax errors throw ParseError; everything else is left to validate().
ContractDocument parse_contract_file(std::string_view text);

struct Diagnostic {
  enum class Kind {
    UndeclaredActionInContract,
    UndeclaredActionInContradiction,
    DuplicateDictionaryEntry,
    EmptyString,
  };
  Kind kind;
  std::string action;
  std::size_t line = 0;
};

const char* to_string(Diagnostic::Kind kind);
/// "line 12: DuplicateDictionaryEntry pay_a_fine"
std::string format_diagnostic(const Diagnostic& d);

/// Every problem found, in file order. Empty means the document is usable.
std::vector<Diagnostic> validate(const ContractDocument& doc);

/// Writes the document back in Contract.txt form (clauses linearized).
std::string serialize_contract(const ContractDocument& doc);

}  // namespace anacon

#endif  // ANACON_CONTRACT_FILE_HPP
