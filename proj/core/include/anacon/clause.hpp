#ifndef ANACON_CLAUSE_HPP
#define ANACON_CLAUSE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "anacon/action.hpp"

namespace anacon {

/// Which deontic family an exclusive choice ranges over.
enum class ChoiceFamily : std::uint8_t { Obligation, Permission };

/// Immutable CL clause. Copies share structure.
class Clause {
 public:
  enum class Kind : std::uint8_t {
    Top,
    Bottom,
    Obligation,
    Prohibition,
    Permission,
    Box,
    And,
    XChoice,
  };

  static Clause top();
  static Clause bottom();

  // Deontic actions must be star-free; std::invalid_argument otherwise.
  static Clause obligation(ActionExpr action);
  static Clause obligation(ActionExpr action, Clause reparation);
  static Clause prohibition(ActionExpr action);
  static Clause prohibition(ActionExpr action, Clause reparation);
  static Clause permission(ActionExpr action);

  /// [guard]body. The guard may contain stars.
  static Clause box(ActionExpr guard, Clause body);
  /// Conjunction of at least two clauses, kept as given (no flattening).
  static Clause conjunction(std::vector<Clause> operands);
  /// Both sides must belong to the same family (obligations, possibly with
  /// reparations, or permissions), otherwise std::invalid_argument.
  static Clause xchoice(Clause left, Clause right);

  /// Top for an empty list, the clause itself for one, And otherwise.
  static Clause conjoin(std::vector<Clause> clauses);

  Kind kind() const noexcept;
  bool is_deontic() const noexcept;

  /// Obligation, Prohibition, Permission.
  const ActionExpr& action() const;
  /// Obligation, Prohibition; nullptr when there is no reparation.
  const Clause* reparation() const;

  /// Box.
  const ActionExpr& guard() const;
  const Clause& body() const;
  /// Box whose guard is exactly `1*`.
  bool is_always_box() const noexcept;

  /// And: all operands. XChoice: left and right.
  std::span<const Clause> operands() const;
  /// XChoice.
  const Clause& left() const;
  const Clause& right() const;
  ChoiceFamily family() const;

  /// Family of an obligation/permission/exclusive choice, if any.
  std::optional<ChoiceFamily> choice_family() const noexcept;

  std::size_t hash() const noexcept;

  friend bool operator==(const Clause& a, const Clause& b);
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  struct Node;
  explicit Clause(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Flattens nested conjunctions, drops Top from them, collapses a conjunction
/// containing Bottom to Bottom, recursively. Idempotent.
Clause normalize(const Clause& c);

/// Every atomic action used by the clause (deontic actions and guards).
AtomSet atoms_of(const Clause& c);

/// Rewrites every atomic action through `rename`; untouched names stay.
Clause rename_actions(const Clause& c,
                      const std::function<AtomicAction(const AtomicAction&)>&
                          rename);

}  // namespace anacon

template <>
struct std::hash<anacon::Clause> {
  std::size_t operator()(const anacon::Clause& c) const noexcept {
    return c.hash();
  }
};

#endif  // ANACON_CLAUSE_HPP
