#include "anacon/action.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace anacon {

namespace {

constexpr std::array<std::string_view, 15> kReservedWords = {
    "O",    "F",     "P",    "T",   "If",  "then", "Always", "After",
    "When", "Before", "and", "or",  "not", "0",    "1"};

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

AtomicAction::AtomicAction(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw std::invalid_argument("invalid action name '" + name_ + "'");
  }
}

bool AtomicAction::is_reserved(std::string_view word) {
  return std::find(kReservedWords.begin(), kReservedWords.end(), word) !=
         kReservedWords.end();
}

bool AtomicAction::is_valid_name(std::string_view name) {
  if (name.empty() || name == "_" || is_reserved(name)) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

// ---------------------------------------------------------------------------
// ActionExpr

struct ActionExpr::Node {
  Kind kind;
  std::optional<AtomicAction> action;
  std::optional<ActionExpr> lhs;
  std::optional<ActionExpr> rhs;
  bool has_star = false;
  bool has_negation = false;
  std::size_t hash = 0;
};

ActionExpr::ActionExpr(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

namespace {

std::size_t kind_seed(ActionExpr::Kind k) {
  return std::hash<int>{}(static_cast<int>(k) + 101);
}

}  // namespace

ActionExpr ActionExpr::impossible() {
  static const ActionExpr zero = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Impossible;
    n->hash = kind_seed(Kind::Impossible);
    return ActionExpr(std::move(n));
  }();
  return zero;
}

ActionExpr ActionExpr::skip() {
  static const ActionExpr one = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Skip;
    n->hash = kind_seed(Kind::Skip);
    return ActionExpr(std::move(n));
  }();
  return one;
}

ActionExpr ActionExpr::atom(AtomicAction action) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->hash = mix(kind_seed(Kind::Atom), std::hash<std::string>{}(action.name()));
  n->action = std::move(action);
  return ActionExpr(std::move(n));
}

ActionExpr ActionExpr::atom(std::string name) {
  return atom(AtomicAction(std::move(name)));
}

namespace {

template <typename NodeT>
std::shared_ptr<NodeT> binary_node(ActionExpr::Kind kind, ActionExpr lhs,
                                   ActionExpr rhs) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->has_star = lhs.contains_star() || rhs.contains_star();
  n->has_negation = lhs.contains_negation() || rhs.contains_negation();
  n->hash = mix(mix(kind_seed(kind), lhs.hash()), rhs.hash());
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool is_atom_conjunction(const ActionExpr& e) {
  if (e.kind() == ActionExpr::Kind::Atom) return true;
  return e.kind() == ActionExpr::Kind::Concurrent &&
         is_atom_conjunction(e.left()) && is_atom_conjunction(e.right());
}

}  // namespace

ActionExpr ActionExpr::concurrent(ActionExpr lhs, ActionExpr rhs) {
  return ActionExpr(
      binary_node<Node>(Kind::Concurrent, std::move(lhs), std::move(rhs)));
}

ActionExpr ActionExpr::sequence(ActionExpr lhs, ActionExpr rhs) {
  return ActionExpr(
      binary_node<Node>(Kind::Sequence, std::move(lhs), std::move(rhs)));
}

ActionExpr ActionExpr::choice(ActionExpr lhs, ActionExpr rhs) {
  return ActionExpr(
      binary_node<Node>(Kind::Choice, std::move(lhs), std::move(rhs)));
}

ActionExpr ActionExpr::negation(ActionExpr operand) {
  if (!is_atom_conjunction(operand)) {
    throw std::invalid_argument(
        "negation applies only to an atom or a concurrent set of atoms");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Negation;
  n->has_star = operand.contains_star();
  n->has_negation = true;
  n->hash = mix(kind_seed(Kind::Negation), operand.hash());
  n->lhs = std::move(operand);
  return ActionExpr(std::move(n));
}

ActionExpr ActionExpr::star(ActionExpr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Star;
  n->has_star = true;
  n->has_negation = operand.contains_negation();
  n->hash = mix(kind_seed(Kind::Star), operand.hash());
  n->lhs = std::move(operand);
  return ActionExpr(std::move(n));
}

ActionExpr::Kind ActionExpr::kind() const noexcept { return node_->kind; }

bool ActionExpr::is_binary() const noexcept {
  return node_->kind == Kind::Concurrent || node_->kind == Kind::Sequence ||
         node_->kind == Kind::Choice;
}

const AtomicAction& ActionExpr::action() const {
  if (!node_->action) throw std::logic_error("ActionExpr is not an atom");
  return *node_->action;
}

const ActionExpr& ActionExpr::left() const {
  if (!is_binary()) throw std::logic_error("ActionExpr is not binary");
  return *node_->lhs;
}

const ActionExpr& ActionExpr::right() const {
  if (!is_binary()) throw std::logic_error("ActionExpr is not binary");
  return *node_->rhs;
}

const ActionExpr& ActionExpr::operand() const {
  if (node_->kind != Kind::Negation && node_->kind != Kind::Star) {
    throw std::logic_error("ActionExpr is not unary");
  }
  return *node_->lhs;
}

bool ActionExpr::contains_star() const noexcept { return node_->has_star; }
bool ActionExpr::contains_negation() const noexcept {
  return node_->has_negation;
}
std::size_t ActionExpr::hash() const noexcept { return node_->hash; }

AtomSet ActionExpr::atoms() const {
  AtomSet out;
  std::function<void(const ActionExpr&)> walk = [&](const ActionExpr& e) {
    switch (e.kind()) {
      case Kind::Atom:
        out.insert(e.action());
        break;
      case Kind::Negation:
      case Kind::Star:
        walk(e.operand());
        break;
      case Kind::Concurrent:
      case Kind::Sequence:
      case Kind::Choice:
        walk(e.left());
        walk(e.right());
        break;
      case Kind::Impossible:
      case Kind::Skip:
        break;
    }
  };
  walk(*this);
  return out;
}

bool operator==(const ActionExpr& a, const ActionExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ActionExpr& a, const ActionExpr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case ActionExpr::Kind::Impossible:
    case ActionExpr::Kind::Skip:
      return std::strong_ordering::equal;
    case ActionExpr::Kind::Atom:
      return a.action() <=> b.action();
    case ActionExpr::Kind::Negation:
    case ActionExpr::Kind::Star:
      return a.operand() <=> b.operand();
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

ActionExpr choice_of(const std::vector<ActionExpr>& alternatives) {
  if (alternatives.empty()) {
    throw std::invalid_argument("choice_of needs at least one alternative");
  }
  ActionExpr acc = alternatives.front();
  for (std::size_t i = 1; i < alternatives.size(); ++i) {
    acc = ActionExpr::choice(acc, alternatives[i]);
  }
  return acc;
}

ActionExpr concurrent_of(const AtomSet& atoms) {
  if (atoms.empty()) {
    throw std::invalid_argument("concurrent_of needs at least one atom");
  }
  auto it = atoms.begin();
  ActionExpr acc = ActionExpr::atom(*it);
  for (++it; it != atoms.end(); ++it) {
    acc = ActionExpr::concurrent(acc, ActionExpr::atom(*it));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Decomposition

std::strong_ordering operator<=>(const FirstStep& a, const FirstStep& b) {
  if (auto c = a.step <=> b.step; c != 0) return c;
  if (a.residual.has_value() != b.residual.has_value()) {
    return a.residual.has_value() ? std::strong_ordering::greater
                                  : std::strong_ordering::less;
  }
  if (!a.residual) return std::strong_ordering::equal;
  return *a.residual <=> *b.residual;
}

namespace {

void require_analyzable(const ActionExpr& alpha, const char* what) {
  if (alpha.contains_star()) {
    throw std::invalid_argument(std::string(what) +
                                ": Kleene star is not allowed here");
  }
  if (alpha.contains_negation()) {
    throw std::invalid_argument(std::string(what) +
                                ": negation cannot be decomposed");
  }
}

StepPattern merge(const StepPattern& a, const StepPattern& b) {
  StepPattern out;
  out.atoms = a.atoms;
  out.atoms.insert(b.atoms.begin(), b.atoms.end());
  out.wildcard = a.wildcard && b.wildcard;
  return out;
}

std::optional<ActionExpr> join_concurrent(const std::optional<ActionExpr>& a,
                                          const std::optional<ActionExpr>& b) {
  if (!a) return b;
  if (!b) return a;
  return ActionExpr::concurrent(*a, *b);
}

void sort_unique(std::vector<FirstStep>& steps) {
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
}

bool has_no_trace(const ActionExpr& e) {
  using Kind = ActionExpr::Kind;
  switch (e.kind()) {
    case Kind::Impossible:
      return true;
    case Kind::Choice:
      return has_no_trace(e.left()) && has_no_trace(e.right());
    case Kind::Sequence:
    case Kind::Concurrent:
      return has_no_trace(e.left()) || has_no_trace(e.right());
    default:
      return false;
  }
}

std::vector<FirstStep> decompose(const ActionExpr& alpha) {
  using Kind = ActionExpr::Kind;
  std::vector<FirstStep> out;
  switch (alpha.kind()) {
    case Kind::Impossible:
      break;
    case Kind::Skip:
      out.push_back({StepPattern{{}, true}, std::nullopt});
      break;
    case Kind::Atom:
      out.push_back({StepPattern{{alpha.action()}, false}, std::nullopt});
      break;
    case Kind::Choice: {
      out = decompose(alpha.left());
      auto rhs = decompose(alpha.right());
      out.insert(out.end(), rhs.begin(), rhs.end());
      break;
    }
    case Kind::Sequence:
      for (auto& fs : decompose(alpha.left())) {
        fs.residual = fs.residual
                          ? ActionExpr::sequence(*fs.residual, alpha.right())
                          : alpha.right();
        out.push_back(std::move(fs));
      }
      break;
    case Kind::Concurrent: {
      auto lhs = decompose(alpha.left());
      auto rhs = decompose(alpha.right());
      for (const auto& a : lhs) {
        for (const auto& b : rhs) {
          out.push_back(
              {merge(a.step, b.step), join_concurrent(a.residual, b.residual)});
        }
      }
      break;
    }
    case Kind::Negation:
    case Kind::Star:
      throw std::logic_error("unreachable: checked by require_analyzable");
  }
  sort_unique(out);
  return out;
}

std::set<Trace> enumerate(const ActionExpr& alpha) {
  using Kind = ActionExpr::Kind;
  std::set<Trace> out;
  switch (alpha.kind()) {
    case Kind::Impossible:
      break;
    case Kind::Skip:
      out.insert(Trace{StepPattern{{}, true}});
      break;
    case Kind::Atom:
      out.insert(Trace{StepPattern{{alpha.action()}, false}});
      break;
    case Kind::Choice: {
      out = enumerate(alpha.left());
      auto rhs = enumerate(alpha.right());
      out.insert(rhs.begin(), rhs.end());
      break;
    }
    case Kind::Sequence: {
      auto rhs = enumerate(alpha.right());
      for (const auto& t1 : enumerate(alpha.left())) {
        for (const auto& t2 : rhs) {
          Trace t = t1;
          t.insert(t.end(), t2.begin(), t2.end());
          out.insert(std::move(t));
        }
      }
      break;
    }
    case Kind::Concurrent: {
      auto rhs = enumerate(alpha.right());
      for (const auto& t1 : enumerate(alpha.left())) {
        for (const auto& t2 : rhs) {
          Trace t(std::max(t1.size(), t2.size()));
          for (std::size_t i = 0; i < t.size(); ++i) {
            if (i < t1.size() && i < t2.size()) {
              t[i] = merge(t1[i], t2[i]);
            } else {
              t[i] = i < t1.size() ? t1[i] : t2[i];
            }
          }
          out.insert(std::move(t));
        }
      }
      break;
    }
    case Kind::Negation:
    case Kind::Star:
      throw std::logic_error("unreachable: checked by require_analyzable");
  }
  return out;
}

}  // namespace

std::vector<FirstStep> first_steps(const ActionExpr& alpha) {
  require_analyzable(alpha, "first_steps");
  auto out = decompose(alpha);
  // A branch whose remainder has no execution can never be completed.
  std::erase_if(out, [](const FirstStep& fs) {
    return fs.residual && has_no_trace(*fs.residual);
  });
  return out;
}

std::set<Trace> traces(const ActionExpr& alpha) {
  require_analyzable(alpha, "traces");
  return enumerate(alpha);
}

// ---------------------------------------------------------------------------
// Steps and mutual exclusion

ActionStep::ActionStep(AtomSet atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw std::invalid_argument("an action step needs at least one action");
  }
}

bool step_satisfies(const ActionStep& step, const AtomSet& required,
                    bool wildcard) {
  if (wildcard) return true;
  return std::includes(step.atoms().begin(), step.atoms().end(),
                       required.begin(), required.end());
}

bool step_satisfies(const ActionStep& step, const StepPattern& pattern) {
  return step_satisfies(step, pattern.atoms, pattern.wildcard);
}

void MutexRelation::add(const AtomicAction& a, const AtomicAction& b) {
  if (a == b) {
    throw std::invalid_argument("action '" + a.name() +
                                "' cannot be contradictory with itself");
  }
  pairs_.insert(a < b ? Pair{a, b} : Pair{b, a});
}

bool MutexRelation::contains(const AtomicAction& a,
                             const AtomicAction& b) const {
  return pairs_.count(a < b ? Pair{a, b} : Pair{b, a}) > 0;
}

bool MutexRelation::admits(const AtomSet& atoms) const {
  for (const auto& [a, b] : pairs_) {
    if (atoms.count(a) && atoms.count(b)) return false;
  }
  return true;
}

bool mutually_exclusive(const AtomSet& s1, const AtomSet& s2,
                        const MutexRelation& mutex) {
  for (const auto& a : s1) {
    for (const auto& b : s2) {
      if (a != b && mutex.contains(a, b)) return true;
    }
  }
  return false;
}

}  // namespace anacon
