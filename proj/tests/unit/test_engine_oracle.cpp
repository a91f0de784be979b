// Engine verdicts against the brute-force oracle, and the metamorphic
// properties that only make sense over many contracts.

#include <vector>

#include "anacon/cl_syntax.hpp"
#include "anacon/conflict_engine.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracle.hpp"

using namespace anacon;
using anacon::testing::atoms;
using anacon::testing::Rng;

namespace {

using Pairs = std::vector<std::pair<AtomicAction, AtomicAction>>;

MutexRelation relation(const Pairs& pairs) {
  MutexRelation m;
  for (const auto& [a, b] : pairs) m.add(a, b);
  return m;
}

testing::ClauseGen small_gen() {
  testing::ClauseGen g;
  g.actions.atoms = atoms({"a", "b", "c"});
  g.actions.max_depth = 2;
  g.max_depth = 3;
  return g;
}

ExplorationLimits limits(std::size_t depth) {
  ExplorationLimits lim;
  lim.max_depth = depth;
  return lim;
}

}  // namespace

TEST_SUITE("conflict_engine") {

TEST_CASE("verdicts and shortest traces agree with the oracle") {
  Rng rng(51);
  const auto g = small_gen();
  const auto& alphabet = g.actions.atoms;
  int conflicting = 0;
  for (int i = 0; i < 800; ++i) {
    std::vector<Clause> cs;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) cs.push_back(random_clause(rng, g));
    Pairs pairs;
    if (i % 2) pairs.emplace_back(alphabet[0], alphabet[1]);

    const auto r = analyze(cs, alphabet, relation(pairs), limits(4));
    const auto o = testing::oracle_check(cs, alphabet, pairs, 4);
    INFO(print_cl(Clause::conjoin(cs)));
    REQUIRE((r.verdict == AnalysisResult::Verdict::Conflict) == o.conflict);
    if (o.conflict) {
      ++conflicting;
      CHECK(r.report->trace.size() == *o.shortest);
    }
  }
  CHECK(conflicting > 50);
}

TEST_CASE("the witness trace really leads to the clash") {
  Rng rng(52);
  const auto g = small_gen();
  const auto& alphabet = g.actions.atoms;
  MutexRelation m;
  m.add(alphabet[0], alphabet[2]);
  for (int i = 0; i < 300; ++i) {
    const std::vector<Clause> cs{random_clause(rng, g), random_clause(rng, g)};
    const auto r = analyze(cs, alphabet, m, limits(4));
    if (r.verdict != AnalysisResult::Verdict::Conflict) continue;
    std::vector<AnalysisState> frontier = split_choices(make_state(cs));
    for (const auto& st : r.report->trace) {
      std::vector<AnalysisState> next;
      for (const auto& s : frontier) {
        for (auto& b : split_choices(residual(s, st, m))) next.push_back(std::move(b));
      }
      frontier = std::move(next);
    }
    bool hit = false;
    for (const auto& s : frontier) hit = hit || check_state(s, m).has_value();
    CHECK(hit);
  }
}

TEST_CASE("a fulfilled obligation shields its reparation") {
  Rng rng(53);
  const auto g = small_gen();
  const std::vector<AtomicAction> just_a{AtomicAction("a")};
  int tried = 0;
  for (int i = 0; i < 400; ++i) {
    const auto c = random_clause(rng, g);
    const std::vector<Clause> alone{c};
    if (analyze(alone, g.actions.atoms, MutexRelation{}, limits(4)).verdict !=
        AnalysisResult::Verdict::NoConflict) {
      continue;
    }
    ++tried;
    const auto wrapped = Clause::obligation(ActionExpr::atom("a"), c);
    CHECK_FALSE(check_state(make_state(std::vector<Clause>{wrapped}), MutexRelation{}));
    const std::vector<Clause> ws{wrapped};
    CHECK(analyze(ws, just_a, MutexRelation{}, limits(4)).verdict ==
          AnalysisResult::Verdict::NoConflict);
  }
  CHECK(tried > 100);
}

TEST_CASE("adding a mutex pair keeps conflicts whose witness avoids it") {
  Rng rng(54);
  const auto g = small_gen();
  const auto& alphabet = g.actions.atoms;
  const AtomicAction a = alphabet[0];
  const AtomicAction b = alphabet[1];
  int kept = 0;
  for (int i = 0; i < 600; ++i) {
    const std::vector<Clause> cs{random_clause(rng, g), random_clause(rng, g)};
    const auto before = analyze(cs, alphabet, MutexRelation{}, limits(4));
    if (before.verdict != AnalysisResult::Verdict::Conflict) continue;
    bool avoids = true;
    for (const auto& st : before.report->trace) {
      if (st.atoms().count(a) && st.atoms().count(b)) avoids = false;
    }
    if (!avoids) continue;
    MutexRelation m;
    m.add(a, b);
    ++kept;
    CHECK(analyze(cs, alphabet, m, limits(4)).verdict == AnalysisResult::Verdict::Conflict);
  }
  CHECK(kept > 30);
}

TEST_CASE("a mutex pair can remove the only path to a conflict") {
  const std::vector<Clause> cs{parse_cl("[a & b](O(c) ^ F(c))")};
  const auto abc = atoms({"a", "b", "c"});
  CHECK(analyze(cs, abc, MutexRelation{}).verdict == AnalysisResult::Verdict::Conflict);
  MutexRelation m;
  m.add(abc[0], abc[1]);
  CHECK(analyze(cs, abc, m).verdict == AnalysisResult::Verdict::NoConflict);
}

}  // TEST_SUITE
