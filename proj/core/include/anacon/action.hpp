// Compound actions over atomic actions: the algebra built from 0, 1, atoms,
// concurrency (&), sequence (.), choice (+), negation (!) and Kleene star.
//
// Deontic modalities only ever see star-free, negation-free expressions; for
// those, first_steps() gives a derivative-style decomposition (what has to
// happen in the next time step, and what is left afterwards) and traces()
// enumerates the finite set of complete executions.

#ifndef ANACON_ACTION_HPP
#define ANACON_ACTION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anacon {

/// An identifier naming one basic action, e.g. `pay_a_fine`.
class AtomicAction {
 public:
  /// Throws std::invalid_argument unless is_valid_name(name).
  explicit AtomicAction(std::string name);

  const std::string& name() const noexcept { return name_; }

  auto operator<=>(const AtomicAction&) const = default;

  /// Letters, digits and underscores, not a reserved word.
  static bool is_valid_name(std::string_view name);
  /// Keywords of the symbolic and restricted-English syntaxes.
  static bool is_reserved(std::string_view word);

 private:
  std::string name_;
};

using AtomSet = std::set<AtomicAction>;

class ActionExpr {
 public:
  enum class Kind : std::uint8_t {
    Impossible,
    Skip,
    Atom,
    Concurrent,
    Sequence,
    Choice,
    Negation,
    Star,
  };

  static ActionExpr impossible();
  static ActionExpr skip();
  static ActionExpr atom(AtomicAction action);
  static ActionExpr atom(std::string name);
  static ActionExpr concurrent(ActionExpr lhs, ActionExpr rhs);
  static ActionExpr sequence(ActionExpr lhs, ActionExpr rhs);
  static ActionExpr choice(ActionExpr lhs, ActionExpr rhs);
  /// Only atoms and concurrent compositions of atoms may be negated.
  static ActionExpr negation(ActionExpr operand);
  static ActionExpr star(ActionExpr operand);

  Kind kind() const noexcept;
  bool is_binary() const noexcept;

  /// Precondition: kind() == Atom.
  const AtomicAction& action() const;
  /// Precondition: is_binary().
  const ActionExpr& left() const;
  const ActionExpr& right() const;
  /// Precondition: kind() is Negation or Star.
  const ActionExpr& operand() const;

  bool contains_star() const noexcept;
  bool contains_negation() const noexcept;
  std::size_t hash() const noexcept;

  /// Every atomic action mentioned anywhere in the expression.
  AtomSet atoms() const;

  friend bool operator==(const ActionExpr& a, const ActionExpr& b);
  friend std::strong_ordering operator<=>(const ActionExpr& a,
                                          const ActionExpr& b);

 private:
  struct Node;
  explicit ActionExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Left fold with `+`. Precondition: non-empty.
ActionExpr choice_of(const std::vector<ActionExpr>& alternatives);
/// Left fold with `&`. Precondition: non-empty.
ActionExpr concurrent_of(const AtomSet& atoms);

/// What one time step has to contain. A wildcard pattern (from `1`) matches
/// every step and never carries atoms.
struct StepPattern {
  AtomSet atoms;
  bool wildcard = false;

  auto operator<=>(const StepPattern&) const = default;
};

/// One way of performing the first time step of an expression. An empty
/// residual means the expression is fully consumed by that step.
struct FirstStep {
  StepPattern step;
  std::optional<ActionExpr> residual;

  bool done() const noexcept { return !residual.has_value(); }
  friend bool operator==(const FirstStep&, const FirstStep&) = default;
  friend std::strong_ordering operator<=>(const FirstStep& a,
                                          const FirstStep& b);
};

using Trace = std::vector<StepPattern>;

/// Sorted, duplicate-free decomposition of `alpha` by its first step.
/// Branches whose remainder has no execution (the `a` of `a.0`) are dropped.
/// Throws std::invalid_argument if alpha contains a star or a negation.
std::vector<FirstStep> first_steps(const ActionExpr& alpha);

/// All complete executions of `alpha`. Same preconditions as first_steps.
std::set<Trace> traces(const ActionExpr& alpha);

/// A non-empty set of atomic actions performed together in one time step.
class ActionStep {
 public:
  /// Throws std::invalid_argument if `atoms` is empty.
  explicit ActionStep(AtomSet atoms);

  const AtomSet& atoms() const noexcept { return atoms_; }
  auto operator<=>(const ActionStep&) const = default;

 private:
  AtomSet atoms_;
};

/// Superset reading: performing extra concurrent actions still performs the
/// required ones.
bool step_satisfies(const ActionStep& step, const AtomSet& required,
                    bool wildcard);
bool step_satisfies(const ActionStep& step, const StepPattern& pattern);

/// Unordered pairs of actions declared contradictory.
class MutexRelation {
 public:
  using Pair = std::pair<AtomicAction, AtomicAction>;

  /// Throws std::invalid_argument for a reflexive pair.
  void add(const AtomicAction& a, const AtomicAction& b);
  bool contains(const AtomicAction& a, const AtomicAction& b) const;
  /// True if no two members of `atoms` form a declared pair.
  bool admits(const AtomSet& atoms) const;

  const std::set<Pair>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }

 private:
  std::set<Pair> pairs_;
};

bool mutually_exclusive(const AtomSet& s1, const AtomSet& s2,
                        const MutexRelation& mutex);

}  // namespace anacon

template <>
struct std::hash<anacon::ActionExpr> {
  std::size_t operator()(const anacon::ActionExpr& e) const noexcept {
    return e.hash();
  }
};

#endif  // ANACON_ACTION_HPP
