#include "anacon/conflict_engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "anacon/error.hpp"
#include "anacon/restricted_english.hpp"

namespace anacon {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool subset(const AtomSet& a, const AtomSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ActionExpr> unique_residuals(const std::vector<FirstStep>& taken) {
  std::vector<ActionExpr> out;
  for (const auto& fs : taken) {
    if (fs.residual &&
        std::find(out.begin(), out.end(), *fs.residual) == out.end()) {
      out.push_back(*fs.residual);
    }
  }
  return out;
}

// Branches of `alpha` whose first step is performed by `step`.
std::vector<FirstStep> taken_branches(const ActionExpr& alpha,
                                      const ActionStep& step) {
  std::vector<FirstStep> out;
  for (auto& fs : first_steps(alpha)) {
    if (step_satisfies(step, fs.step)) out.push_back(std::move(fs));
  }
  return out;
}

bool any_done(const std::vector<FirstStep>& v) {
  return std::any_of(v.begin(), v.end(),
                     [](const FirstStep& fs) { return fs.done(); });
}

Clause reparation_or_bottom(const Clause& c) {
  const Clause* rep = c.reparation();
  return rep ? *rep : Clause::bottom();
}

Clause with_action(const Clause& c, ActionExpr a) {
  const Clause* rep = c.reparation();
  if (c.kind() == Clause::Kind::Obligation) {
    return rep ? Clause::obligation(std::move(a), *rep)
               : Clause::obligation(std::move(a));
  }
  return rep ? Clause::prohibition(std::move(a), *rep)
             : Clause::prohibition(std::move(a));
}

Clause step_clause(const Clause& c, const ActionStep& step) {
  using K = Clause::Kind;
  switch (c.kind()) {
    case K::Top:
    case K::Bottom:
      return c;
    case K::Obligation: {
      auto taken = taken_branches(c.action(), step);
      if (taken.empty()) return reparation_or_bottom(c);
      if (any_done(taken)) return Clause::top();
      return with_action(c, choice_of(unique_residuals(taken)));
    }
    case K::Prohibition: {
      auto taken = taken_branches(c.action(), step);
      if (taken.empty()) return Clause::top();
      if (any_done(taken)) return reparation_or_bottom(c);
      return with_action(c, choice_of(unique_residuals(taken)));
    }
    case K::Permission:
      return Clause::top();
    case K::Box: {
      if (c.is_always_box()) return c;
      auto taken = taken_branches(c.guard(), step);
      std::vector<Clause> parts;
      if (any_done(taken)) parts.push_back(c.body());
      auto rest = unique_residuals(taken);
      if (!rest.empty()) parts.push_back(Clause::box(choice_of(rest), c.body()));
      return Clause::conjoin(std::move(parts));
    }
    case K::And:
    case K::XChoice:
      break;
  }
  throw std::logic_error("residual: state element must not be And or XChoice");
}

struct StateKey {
  std::vector<Clause> clauses;
  std::size_t hash = 0;
  bool operator==(const StateKey& o) const { return clauses == o.clauses; }
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept { return k.hash; }
};

StateKey key_of(const AnalysisState& s) {
  StateKey k;
  k.clauses.reserve(s.active.size());
  for (const auto& a : s.active) k.clauses.push_back(a.clause);
  std::sort(k.clauses.begin(), k.clauses.end());
  std::size_t h = k.clauses.size();
  for (const auto& c : k.clauses) {
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  k.hash = h;
  return k;
}

}  // namespace

bool AnalysisState::violating() const noexcept {
  return active.size() == 1 && active[0].clause.kind() == Clause::Kind::Bottom;
}

bool AnalysisState::has_choice() const noexcept {
  return std::any_of(active.begin(), active.end(), [](const ActiveClause& a) {
    return a.clause.kind() == Clause::Kind::XChoice;
  });
}

namespace {

// Elements other than `fresh` are taken to be already unfolded, so an always
// box among them does not reintroduce its body.
AnalysisState assemble(std::vector<ActiveClause> elements, std::size_t depth,
                       std::optional<std::size_t> fresh) {
  AnalysisState s;
  s.depth = depth;
  std::unordered_set<Clause> seen;
  std::optional<std::size_t> bottom_origin;

  bool unfold = true;
  std::function<void(const Clause&, std::size_t)> add =
      [&](const Clause& c, std::size_t origin) {
        switch (c.kind()) {
          case Clause::Kind::Top:
            return;
          case Clause::Kind::Bottom:
            if (!bottom_origin) bottom_origin = origin;
            return;
          case Clause::Kind::And:
            for (const auto& op : c.operands()) add(op, origin);
            return;
          default:
            break;
        }
        if (seen.insert(c).second) s.active.push_back({c, origin});
        if (unfold && c.kind() == Clause::Kind::Box && c.is_always_box()) {
          add(c.body(), origin);
        }
      };
  for (std::size_t i = 0; i < elements.size(); ++i) {
    unfold = !fresh || *fresh == i;
    add(normalize(elements[i].clause), elements[i].origin);
  }

  if (bottom_origin) {
    s.active.clear();
    s.active.push_back({Clause::bottom(), *bottom_origin});
  }
  return s;
}

}  // namespace

AnalysisState make_state(std::vector<ActiveClause> elements, std::size_t depth) {
  return assemble(std::move(elements), depth, std::nullopt);
}

AnalysisState make_state(std::span<const Clause> clauses) {
  std::vector<ActiveClause> elements;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    elements.push_back({clauses[i], i});
  }
  return make_state(std::move(elements), 0);
}

std::vector<AnalysisState> split_choices(
    const AnalysisState& s, std::vector<std::vector<std::string>>* notes) {
  auto it = std::find_if(s.active.begin(), s.active.end(),
                         [](const ActiveClause& a) {
                           return a.clause.kind() == Clause::Kind::XChoice;
                         });
  if (it == s.active.end()) {
    if (notes) notes->assign(1, {});
    return {s};
  }
  const auto idx = static_cast<std::size_t>(it - s.active.begin());
  const ActiveClause choice = *it;

  std::vector<AnalysisState> out;
  if (notes) notes->clear();
  const char* side[] = {"left", "right"};
  for (int b = 0; b < 2; ++b) {
    std::vector<ActiveClause> elements = s.active;
    elements[idx].clause = b == 0 ? choice.clause.left() : choice.clause.right();
    AnalysisState branch = assemble(std::move(elements), s.depth, idx);
    std::vector<std::vector<std::string>> sub_notes;
    auto sub = split_choices(branch, notes ? &sub_notes : nullptr);
    for (std::size_t k = 0; k < sub.size(); ++k) {
      out.push_back(std::move(sub[k]));
      if (notes) {
        std::vector<std::string> n{"clause " + std::to_string(choice.origin + 1) +
                                   ": " + side[b] + " branch of an exclusive choice"};
        n.insert(n.end(), sub_notes[k].begin(), sub_notes[k].end());
        notes->push_back(std::move(n));
      }
    }
  }
  return out;
}

std::vector<DeonticEntry> active_deontics(const AnalysisState& s) {
  std::vector<DeonticEntry> out;
  for (std::size_t i = 0; i < s.active.size(); ++i) {
    const Clause& c = s.active[i].clause;
    Modality m;
    switch (c.kind()) {
      case Clause::Kind::Obligation: m = Modality::Obligation; break;
      case Clause::Kind::Permission: m = Modality::Permission; break;
      case Clause::Kind::Prohibition: m = Modality::Prohibition; break;
      default: continue;
    }
    for (const auto& fs : first_steps(c.action())) {
      out.push_back({m, fs.step, i});
    }
  }
  return out;
}

const char* to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::ObligationVsProhibition: return "ObligationVsProhibition";
    case ConflictKind::PermissionVsProhibition: return "PermissionVsProhibition";
    case ConflictKind::ObligationVsObligationMutex: return "ObligationVsObligationMutex";
    case ConflictKind::PermissionVsObligationMutex: return "PermissionVsObligationMutex";
  }
  return "?";
}

std::optional<Clash> check_state(const AnalysisState& s,
                                 const MutexRelation& mutex) {
  const auto entries = active_deontics(s);
  auto of = [&](Modality m) {
    std::vector<const DeonticEntry*> v;
    for (const auto& e : entries) {
      if (e.modality == m) v.push_back(&e);
    }
    return v;
  };
  const auto obl = of(Modality::Obligation);
  const auto per = of(Modality::Permission);
  const auto pro = of(Modality::Prohibition);
  auto clash = [&](ConflictKind k, const DeonticEntry* l, const DeonticEntry* r) {
    return Clash{k, s.active[l->element], s.active[r->element]};
  };

  for (auto* f : pro) {
    for (auto* o : obl) {
      if (subset(f->step.atoms, o->step.atoms) || subset(o->step.atoms, f->step.atoms)) {
        return clash(ConflictKind::ObligationVsProhibition, o, f);
      }
    }
  }
  for (auto* f : pro) {
    for (auto* p : per) {
      if (subset(f->step.atoms, p->step.atoms) || subset(p->step.atoms, f->step.atoms)) {
        return clash(ConflictKind::PermissionVsProhibition, p, f);
      }
    }
  }
  // j starts at i: one demand may already contain a contradictory pair.
  for (std::size_t i = 0; i < obl.size(); ++i) {
    for (std::size_t j = i; j < obl.size(); ++j) {
      if (mutually_exclusive(obl[i]->step.atoms, obl[j]->step.atoms, mutex)) {
        return clash(ConflictKind::ObligationVsObligationMutex, obl[i], obl[j]);
      }
    }
  }
  for (auto* p : per) {
    for (auto* o : obl) {
      if (mutually_exclusive(p->step.atoms, o->step.atoms, mutex)) {
        return clash(ConflictKind::PermissionVsObligationMutex, p, o);
      }
    }
  }
  return std::nullopt;
}

AnalysisState residual(const AnalysisState& s, const ActionStep& step,
                       const MutexRelation& mutex) {
  if (!mutex.admits(step.atoms())) {
    throw std::invalid_argument("step contains mutually exclusive actions");
  }
  std::vector<ActiveClause> next;
  next.reserve(s.active.size());
  for (const auto& a : s.active) {
    next.push_back({step_clause(a.clause, step), a.origin});
  }
  return make_state(std::move(next), s.depth + 1);
}

void check_supported(const Clause& c) {
  using K = Clause::Kind;
  switch (c.kind()) {
    case K::Obligation:
    case K::Prohibition:
    case K::Permission:
      if (c.action().contains_negation()) {
        throw UnsupportedContract(
            "action negation (!) under a deontic modality cannot be analyzed");
      }
      if (const Clause* rep = c.kind() != K::Permission ? c.reparation() : nullptr) {
        check_supported(*rep);
      }
      return;
    case K::Box:
      if (!c.is_always_box() &&
          (c.guard().contains_star() || c.guard().contains_negation())) {
        throw UnsupportedContract(
            "only the [1*] guard may use repetition, and guards cannot use "
            "negation");
      }
      check_supported(c.body());
      return;
    case K::And:
    case K::XChoice:
      for (const auto& op : c.operands()) check_supported(op);
      return;
    case K::Top:
    case K::Bottom:
      return;
  }
}

Clause counterexample_formula(const std::vector<ActionStep>& trace,
                              const Clause& left, const Clause& right) {
  Clause clash = Clause::conjunction({left, right});
  if (trace.empty()) return clash;
  ActionExpr guard = concurrent_of(trace.front().atoms());
  for (std::size_t i = 1; i < trace.size(); ++i) {
    guard = ActionExpr::sequence(guard, concurrent_of(trace[i].atoms()));
  }
  return Clause::box(std::move(guard), std::move(clash));
}

std::vector<ActionStep> enumerate_steps(const std::vector<AtomicAction>& alphabet,
                                        const MutexRelation& mutex) {
  std::vector<ActionStep> out;
  const std::size_t n = alphabet.size();
  if (n == 0) return out;
  if (n >= 64) throw std::invalid_argument("alphabet too large to enumerate");
  const std::uint64_t full = n == 63 ? ~0ULL >> 1 : (1ULL << n) - 1;
  for (std::uint64_t mask = full; mask > 0; --mask) {
    AtomSet atoms;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ULL << i)) atoms.insert(alphabet[i]);
    }
    if (mutex.admits(atoms)) out.emplace_back(std::move(atoms));
  }
  return out;
}

AnalysisResult analyze(std::span<const Clause> clauses,
                       const std::vector<AtomicAction>& alphabet,
                       const MutexRelation& mutex,
                       const ExplorationLimits& limits, Automaton* record) {
  for (const auto& c : clauses) check_supported(c);

  AnalysisResult result;
  if (alphabet.size() > limits.max_alphabet) {
    result.verdict = AnalysisResult::Verdict::Inconclusive;
    result.bound_hit = "alphabet of " + std::to_string(alphabet.size()) +
                       " actions exceeds the limit of " +
                       std::to_string(limits.max_alphabet);
    return result;
  }
  const std::vector<ActionStep> steps = enumerate_steps(alphabet, mutex);
  if (record) {
    *record = Automaton{};
    record->alphabet = alphabet;
  }

  struct Node {
    AnalysisState state;
    std::size_t parent;
    std::optional<ActionStep> step;
    std::vector<std::string> notes;
  };
  std::vector<Node> nodes;
  std::unordered_map<StateKey, std::size_t, StateKeyHash> visited;
  std::deque<std::size_t> queue;
  bool out_of_states = false;

  auto make_report = [&](std::size_t idx, const Clash& clash) {
    ConflictReport r{clash.kind, clash.left, clash.right, {}, nodes[idx].notes,
                     Clause::top()};
    for (std::size_t i = idx; nodes[i].step; i = nodes[i].parent) {
      r.trace.push_back(*nodes[i].step);
    }
    std::reverse(r.trace.begin(), r.trace.end());
    r.as_formula = counterexample_formula(r.trace, r.left.clause, r.right.clause);
    return r;
  };

  // Adds the successors of one generated state; returns a report on conflict.
  auto visit = [&](const AnalysisState& s, std::size_t parent,
                   const std::optional<ActionStep>& step)
      -> std::optional<ConflictReport> {
    std::vector<std::vector<std::string>> notes;
    auto branches = split_choices(s, &notes);
    for (std::size_t b = 0; b < branches.size(); ++b) {
      StateKey key = key_of(branches[b]);
      auto found = visited.find(key);
      if (found != visited.end()) {
        if (record && parent != kNone) {
          record->transitions.push_back({parent, *step, found->second});
        }
        continue;
      }
      if (nodes.size() >= limits.max_states) {
        out_of_states = true;
        return std::nullopt;
      }
      const std::size_t idx = nodes.size();
      std::vector<std::string> all_notes =
          parent == kNone ? std::vector<std::string>{} : nodes[parent].notes;
      all_notes.insert(all_notes.end(), notes[b].begin(), notes[b].end());
      nodes.push_back({branches[b], parent, step, std::move(all_notes)});
      visited.emplace(std::move(key), idx);
      if (record) {
        record->states.push_back(branches[b]);
        if (parent == kNone) {
          record->initial.push_back(idx);
        } else {
          record->transitions.push_back({parent, *step, idx});
        }
      }
      if (auto clash = check_state(nodes[idx].state, mutex)) {
        return make_report(idx, *clash);
      }
      queue.push_back(idx);
    }
    return std::nullopt;
  };

  auto finish = [&](std::optional<ConflictReport> report) {
    result.states = nodes.size();
    if (report) {
      result.verdict = AnalysisResult::Verdict::Conflict;
      result.report = std::move(report);
    }
    return result;
  };

  if (auto r = visit(make_state(clauses), kNone, std::nullopt)) {
    return finish(std::move(r));
  }
  bool truncated = false;
  while (!queue.empty() && !out_of_states) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const AnalysisState state = nodes[idx].state;
    if (state.satisfied() || state.violating()) continue;
    if (state.depth >= limits.max_depth) {
      truncated = true;
      continue;
    }
    for (const auto& step : steps) {
      ++result.transitions;
      if (auto r = visit(residual(state, step, mutex), idx, step)) {
        return finish(std::move(r));
      }
      if (out_of_states) break;
    }
  }
  finish(std::nullopt);
  if (out_of_states) {
    result.verdict = AnalysisResult::Verdict::Inconclusive;
    result.bound_hit = "max-states " + std::to_string(limits.max_states);
  } else if (truncated) {
    result.verdict = AnalysisResult::Verdict::Inconclusive;
    result.bound_hit = "max-depth " + std::to_string(limits.max_depth);
  }
  return result;
}

AnalysisResult build_and_check(const ContractDocument& doc,
                               const ExplorationLimits& limits) {
  return analyze(doc.clauses, doc.alphabet(), doc.mutex(), limits);
}

std::string report_to_english(const ConflictReport& r,
                              std::span<const LineRange> spans) {
  auto where = [&](const ActiveClause& a) {
    std::string s = "clause " + std::to_string(a.origin + 1);
    if (a.origin < spans.size()) {
      const LineRange& lr = spans[a.origin];
      s += lr.first == lr.last
               ? " (line " + std::to_string(lr.first) + ")"
               : " (lines " + std::to_string(lr.first) + "-" +
                     std::to_string(lr.last) + ")";
    }
    return s;
  };
  std::string out = std::string("% conflict ") + to_string(r.kind) + " between " +
                    where(r.left) + " and " + where(r.right) + "\n";
  for (const auto& b : r.branches) out += "% branch " + b + "\n";
  out += linearize_re(r.as_formula) + "\n";
  return out;
}

}  // namespace anacon
