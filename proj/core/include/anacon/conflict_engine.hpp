// Explicit-state conflict analysis. A state is the set of clauses still in
// force; a transition performs one concurrent step (a non-empty, mutex-free
// subset of the alphabet) and residuates every clause by it. Exploration is
// breadth-first, so the first conflict found has a shortest witness trace.

#ifndef ANACON_CONFLICT_ENGINE_HPP
#define ANACON_CONFLICT_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anacon/action.hpp"
#include "anacon/clause.hpp"
#include "anacon/contract_file.hpp"

namespace anacon {

/// A clause in force, tagged with the index of the contract clause it came
/// from (used to point back into the source file).
struct ActiveClause {
  Clause clause;
  std::size_t origin = 0;
};

/// Elements are normalized, duplicate-free and never Top or And. Boxes
/// guarded by `1*` are kept and their bodies are unfolded next to them.
/// A state containing Bottom is exactly {Bottom}.
struct AnalysisState {
  std::vector<ActiveClause> active;
  std::size_t depth = 0;

  bool satisfied() const noexcept { return active.empty(); }
  bool violating() const noexcept;
  bool has_choice() const noexcept;
};

/// Builds a state from clauses (origin i for clauses[i]).
AnalysisState make_state(std::span<const Clause> clauses);
AnalysisState make_state(std::vector<ActiveClause> elements, std::size_t depth);

/// Resolves every exclusive choice; each result has no XChoice element.
/// `notes[i]` describes the branches taken for result i.
std::vector<AnalysisState> split_choices(
    const AnalysisState& s, std::vector<std::vector<std::string>>* notes = nullptr);

enum class Modality { Obligation, Permission, Prohibition };

struct DeonticEntry {
  Modality modality;
  StepPattern step;      // what the modality concerns in the next step
  std::size_t element;   // index into AnalysisState::active
};

/// Entries in element order, then first-step order. Guarded clauses
/// contribute nothing. Precondition: !s.has_choice().
std::vector<DeonticEntry> active_deontics(const AnalysisState& s);

enum class ConflictKind {
  ObligationVsProhibition,
  PermissionVsProhibition,
  ObligationVsObligationMutex,
  PermissionVsObligationMutex,
};

const char* to_string(ConflictKind kind);

struct Clash {
  ConflictKind kind;
  ActiveClause left;   // the O or P statement
  ActiveClause right;  // the F statement (second O for kind 3)
};

std::optional<Clash> check_state(const AnalysisState& s,
                                 const MutexRelation& mutex);

/// One transition. Precondition: !s.has_choice(); throws
/// std::invalid_argument if the step contains a mutex pair.
AnalysisState residual(const AnalysisState& s, const ActionStep& step,
                       const MutexRelation& mutex);

/// Throws UnsupportedContract for negation anywhere and for any star other
/// than a whole `1*` box guard.
void check_supported(const Clause& c);

struct ConflictReport {
  ConflictKind kind;
  ActiveClause left;
  ActiveClause right;
  std::vector<ActionStep> trace;
  std::vector<std::string> branches;  // exclusive-choice branches taken
  Clause as_formula;
};

/// [s1 . s2 . ... . sn](left ^ right), or (left ^ right) for an empty trace.
Clause counterexample_formula(const std::vector<ActionStep>& trace,
                              const Clause& left, const Clause& right);

struct ExplorationLimits {
  std::size_t max_states = 100000;
  std::size_t max_depth = 10;
  /// Larger alphabets are reported inconclusive without exploring.
  std::size_t max_alphabet = 20;
};

struct Transition {
  std::size_t from;
  ActionStep step;
  std::size_t to;
};

struct Automaton {
  std::vector<AtomicAction> alphabet;
  std::vector<AnalysisState> states;
  std::vector<std::size_t> initial;  // several when the contract starts with a choice
  std::vector<Transition> transitions;
};

struct AnalysisResult {
  enum class Verdict { NoConflict, Conflict, Inconclusive };
  Verdict verdict = Verdict::NoConflict;
  std::optional<ConflictReport> report;
  std::string bound_hit;  // set when Inconclusive
  std::size_t states = 0;
  std::size_t transitions = 0;
};

/// Every mutex-free non-empty subset of the alphabet, in the order the
/// explorer tries them (largest bitmask first, bit i = alphabet[i]).
std::vector<ActionStep> enumerate_steps(const std::vector<AtomicAction>& alphabet,
                                        const MutexRelation& mutex);

/// Breadth-first search for a conflict. When `record` is given, every
/// explored state and transition is stored there.
AnalysisResult analyze(std::span<const Clause> clauses,
                       const std::vector<AtomicAction>& alphabet,
                       const MutexRelation& mutex,
                       const ExplorationLimits& limits = {},
                       Automaton* record = nullptr);

/// analyze() over the document's clauses, dictionary and contradictions.
AnalysisResult build_and_check(const ContractDocument& doc,
                               const ExplorationLimits& limits = {});

/// Header line (kind and source lines of both clauses) followed by the
/// counter-example formula in restricted English.
std::string report_to_english(const ConflictReport& r,
                              std::span<const LineRange> spans = {});

}  // namespace anacon

#endif  // ANACON_CONFLICT_ENGINE_HPP
