#include "anacon/clause.hpp"

#include <stdexcept>

namespace anacon {

struct Clause::Node {
  Kind kind;
  std::optional<ActionExpr> action;  // deontic action or box guard
  std::vector<Clause> children;      // reparation / body / operands
  ChoiceFamily family = ChoiceFamily::Obligation;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Clause::Clause(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

template <typename NodeT>
std::size_t node_hash(const NodeT& n) {
  std::size_t h = std::hash<int>{}(static_cast<int>(n.kind) + 17);
  if (n.action) h = mix(h, n.action->hash());
  for (const auto& c : n.children) h = mix(h, c.hash());
  return mix(h, static_cast<std::size_t>(n.family));
}

}  // namespace

Clause Clause::top() {
  static const Clause t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Top;
    n->hash = node_hash(*n);
    return Clause(std::move(n));
  }();
  return t;
}

Clause Clause::bottom() {
  static const Clause b = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bottom;
    n->hash = node_hash(*n);
    return Clause(std::move(n));
  }();
  return b;
}

namespace {

void require_star_free(const ActionExpr& action, const char* modality) {
  if (action.contains_star()) {
    throw std::invalid_argument(
        std::string("Kleene star is not allowed inside ") + modality);
  }
}

}  // namespace

Clause Clause::obligation(ActionExpr action) {
  require_star_free(action, "an obligation");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Obligation;
  n->action = std::move(action);
  n->hash = node_hash(*n);
  return Clause(std::move(n));
}

Clause Clause::obligation(ActionExpr action, Clause reparation) {
  require_star_free(action, "an obligation");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Obligation;
  n->action = std::move(action);
  n->children.push_back(std::move(reparation));
  n->hash = node_hash(*n);
  return Clause(std::move(n));
}

Clause Clause::prohibition(ActionExpr action) {
  require_star_free(action, "a prohibition");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prohibition;
  n->action = std::move(action);
  n->hash = node_hash(*n);
  return Clause(std::move(n));
}

Clause Clause::prohibition(ActionExpr action, Clause reparation) {
  require_star_free(action, "a prohibition");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prohibition;
  n->action = std::move(action);
  n->children.push_back(std::move(reparation));
  n->hash = node_hash(*n);
  return Clause(std::move(n));
}

Clause Clause::permission(ActionExpr action) {
  require_star_free(action, "a permission");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Permission;
  n->action = std::move(action);
  n->hash = node_hash(*n);
  return Clause(std::move(n));
}

Clause Clause::box(ActionExpr guard, Clause body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->action = std::move(guard);
  n->children.push_back(std::move(body));
  n->hash = node_hash(*n);
  return Clause(std::move(n));
}

Clause Clause::conjunction(std::vector<Clause> operands) {
  if (operands.size() < 2) {
    throw std::invalid_argument("a conjunction needs at least two clauses");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->children = std::move(operands);
  n->hash = node_hash(*n);
  return Clause(std::move(n));
}

Clause Clause::xchoice(Clause left, Clause right) {
  auto lf = left.choice_family();
  auto rf = right.choice_family();
  if (!lf || !rf || *lf != *rf) {
    throw std::invalid_argument(
        "exclusive choice combines two obligations or two permissions");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::XChoice;
  n->family = *lf;
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  n->hash = node_hash(*n);
  return Clause(std::move(n));
}

Clause Clause::conjoin(std::vector<Clause> clauses) {
  if (clauses.empty()) return top();
  if (clauses.size() == 1) return std::move(clauses.front());
  return conjunction(std::move(clauses));
}

Clause::Kind Clause::kind() const noexcept { return node_->kind; }

bool Clause::is_deontic() const noexcept {
  return node_->kind == Kind::Obligation || node_->kind == Kind::Prohibition ||
         node_->kind == Kind::Permission;
}

const ActionExpr& Clause::action() const {
  if (!is_deontic()) throw std::logic_error("clause has no deontic action");
  return *node_->action;
}

const Clause* Clause::reparation() const {
  if (node_->kind != Kind::Obligation && node_->kind != Kind::Prohibition) {
    throw std::logic_error("only obligations and prohibitions are reparable");
  }
  return node_->children.empty() ? nullptr : &node_->children.front();
}

const ActionExpr& Clause::guard() const {
  if (node_->kind != Kind::Box) throw std::logic_error("clause is not a box");
  return *node_->action;
}

const Clause& Clause::body() const {
  if (node_->kind != Kind::Box) throw std::logic_error("clause is not a box");
  return node_->children.front();
}

bool Clause::is_always_box() const noexcept {
  if (node_->kind != Kind::Box) return false;
  const ActionExpr& g = *node_->action;
  return g.kind() == ActionExpr::Kind::Star &&
         g.operand().kind() == ActionExpr::Kind::Skip;
}

std::span<const Clause> Clause::operands() const {
  if (node_->kind != Kind::And && node_->kind != Kind::XChoice) {
    throw std::logic_error("clause has no operands");
  }
  return node_->children;
}

const Clause& Clause::left() const {
  if (node_->kind != Kind::XChoice) throw std::logic_error("not an xchoice");
  return node_->children[0];
}

const Clause& Clause::right() const {
  if (node_->kind != Kind::XChoice) throw std::logic_error("not an xchoice");
  return node_->children[1];
}

ChoiceFamily Clause::family() const {
  if (node_->kind != Kind::XChoice) throw std::logic_error("not an xchoice");
  return node_->family;
}

std::optional<ChoiceFamily> Clause::choice_family() const noexcept {
  switch (node_->kind) {
    case Kind::Obligation:
      return ChoiceFamily::Obligation;
    case Kind::Permission:
      return ChoiceFamily::Permission;
    case Kind::XChoice:
      return node_->family;
    default:
      return std::nullopt;
  }
}

std::size_t Clause::hash() const noexcept { return node_->hash; }

bool operator==(const Clause& a, const Clause& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (x.action.has_value() != y.action.has_value()) {
    return x.action.has_value() ? std::strong_ordering::greater
                                : std::strong_ordering::less;
  }
  if (x.action) {
    if (auto c = *x.action <=> *y.action; c != 0) return c;
  }
  if (auto c = x.family <=> y.family; c != 0) return c;
  if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (auto c = x.children[i] <=> y.children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Clause normalize(const Clause& c) {
  using Kind = Clause::Kind;
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Permission:
      return c;
    case Kind::Obligation:
      if (const Clause* rep = c.reparation()) {
        return Clause::obligation(c.action(), normalize(*rep));
      }
      return c;
    case Kind::Prohibition:
      if (const Clause* rep = c.reparation()) {
        return Clause::prohibition(c.action(), normalize(*rep));
      }
      return c;
    case Kind::Box:
      return Clause::box(c.guard(), normalize(c.body()));
    case Kind::XChoice:
      return Clause::xchoice(normalize(c.left()), normalize(c.right()));
    case Kind::And: {
      std::vector<Clause> flat;
      for (const auto& op : c.operands()) {
        Clause n = normalize(op);
        if (n.kind() == Kind::Bottom) return n;
        if (n.kind() == Kind::Top) continue;
        if (n.kind() == Kind::And) {
          flat.insert(flat.end(), n.operands().begin(), n.operands().end());
        } else {
          flat.push_back(std::move(n));
        }
      }
      return Clause::conjoin(std::move(flat));
    }
  }
  return c;
}

namespace {

void collect_atoms(const Clause& c, AtomSet& out) {
  using Kind = Clause::Kind;
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bottom:
      return;
    case Kind::Obligation:
    case Kind::Prohibition:
    case Kind::Permission: {
      auto a = c.action().atoms();
      out.insert(a.begin(), a.end());
      if (c.kind() != Kind::Permission) {
        if (const Clause* rep = c.reparation()) collect_atoms(*rep, out);
      }
      return;
    }
    case Kind::Box: {
      auto a = c.guard().atoms();
      out.insert(a.begin(), a.end());
      collect_atoms(c.body(), out);
      return;
    }
    case Kind::And:
    case Kind::XChoice:
      for (const auto& op : c.operands()) collect_atoms(op, out);
      return;
  }
}

ActionExpr rename_expr(
    const ActionExpr& e,
    const std::function<AtomicAction(const AtomicAction&)>& rename) {
  using K = ActionExpr::Kind;
  switch (e.kind()) {
    case K::Impossible:
    case K::Skip:
      return e;
    case K::Atom:
      return ActionExpr::atom(rename(e.action()));
    case K::Negation:
      return ActionExpr::negation(rename_expr(e.operand(), rename));
    case K::Star:
      return ActionExpr::star(rename_expr(e.operand(), rename));
    case K::Concurrent:
      return ActionExpr::concurrent(rename_expr(e.left(), rename),
                                    rename_expr(e.right(), rename));
    case K::Sequence:
      return ActionExpr::sequence(rename_expr(e.left(), rename),
                                  rename_expr(e.right(), rename));
    case K::Choice:
      return ActionExpr::choice(rename_expr(e.left(), rename),
                                rename_expr(e.right(), rename));
  }
  return e;
}

}  // namespace

AtomSet atoms_of(const Clause& c) {
  AtomSet out;
  collect_atoms(c, out);
  return out;
}

Clause rename_actions(
    const Clause& c,
    const std::function<AtomicAction(const AtomicAction&)>& rename) {
  using Kind = Clause::Kind;
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bottom:
      return c;
    case Kind::Obligation:
      if (const Clause* rep = c.reparation()) {
        return Clause::obligation(rename_expr(c.action(), rename),
                                  rename_actions(*rep, rename));
      }
      return Clause::obligation(rename_expr(c.action(), rename));
    case Kind::Prohibition:
      if (const Clause* rep = c.reparation()) {
        return Clause::prohibition(rename_expr(c.action(), rename),
                                   rename_actions(*rep, rename));
      }
      return Clause::prohibition(rename_expr(c.action(), rename));
    case Kind::Permission:
      return Clause::permission(rename_expr(c.action(), rename));
    case Kind::Box:
      return Clause::box(rename_expr(c.guard(), rename),
                         rename_actions(c.body(), rename));
    case Kind::XChoice:
      return Clause::xchoice(rename_actions(c.left(), rename),
                             rename_actions(c.right(), rename));
    case Kind::And: {
      std::vector<Clause> ops;
      for (const auto& op : c.operands()) ops.push_back(rename_actions(op, rename));
      return Clause::conjunction(std::move(ops));
    }
  }
  return c;
}

}  // namespace anacon
