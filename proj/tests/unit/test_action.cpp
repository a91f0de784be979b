#include <functional>
#include <set>
#include <vector>

#include "anacon/action.hpp"
#include "anacon/clause.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace anacon;
using anacon::testing::atoms;
using anacon::testing::Rng;

namespace {

ActionExpr A(const char* n) { return ActionExpr::atom(n); }

StepPattern pat(std::initializer_list<const char*> names) {
  StepPattern p;
  for (const char* n : names) p.atoms.insert(AtomicAction(n));
  return p;
}

// Rebuilds complete executions by following every first-step branch.
std::set<Trace> closure(const ActionExpr& e) {
  std::set<Trace> out;
  for (const auto& fs : first_steps(e)) {
    if (fs.done()) {
      out.insert(Trace{fs.step});
      continue;
    }
    for (const auto& tail : closure(*fs.residual)) {
      Trace t{fs.step};
      t.insert(t.end(), tail.begin(), tail.end());
      out.insert(std::move(t));
    }
  }
  return out;
}

// Every star- and negation-free expression up to `depth` over `leaves`.
std::vector<ActionExpr> all_actions(const std::vector<ActionExpr>& leaves, int depth) {
  std::vector<ActionExpr> level = leaves;
  for (int d = 1; d <= depth; ++d) {
    std::vector<ActionExpr> next = level;
    for (const auto& l : level) {
      for (const auto& r : level) {
        next.push_back(ActionExpr::concurrent(l, r));
        next.push_back(ActionExpr::sequence(l, r));
        next.push_back(ActionExpr::choice(l, r));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

TEST_SUITE("cl_core") {

TEST_CASE("atomic action names") {
  CHECK(AtomicAction::is_valid_name("pay_a_fine"));
  CHECK(AtomicAction::is_valid_name("20_minutes_the_flight_is_due_to_leave_and_not_before"));
  CHECK_FALSE(AtomicAction::is_valid_name(""));
  CHECK_FALSE(AtomicAction::is_valid_name("pay a fine"));
  CHECK_FALSE(AtomicAction::is_valid_name("pay-fine"));
  for (const char* w : {"O", "F", "P", "If", "then", "Always", "After", "When",
                        "Before", "and", "or", "not", "0", "1"}) {
    CHECK_FALSE(AtomicAction::is_valid_name(w));
  }
  CHECK_THROWS_AS(AtomicAction("and"), std::invalid_argument);
}

TEST_CASE("star and negation stay out of deontic actions") {
  CHECK_THROWS_AS(Clause::obligation(ActionExpr::star(A("a"))), std::invalid_argument);
  CHECK_THROWS_AS(Clause::permission(ActionExpr::sequence(A("a"), ActionExpr::star(A("b")))),
                  std::invalid_argument);
  CHECK_NOTHROW(Clause::box(ActionExpr::star(ActionExpr::skip()), Clause::top()));
  CHECK_THROWS_AS(ActionExpr::negation(ActionExpr::sequence(A("a"), A("b"))),
                  std::invalid_argument);
  CHECK_NOTHROW(ActionExpr::negation(ActionExpr::concurrent(A("a"), A("b"))));
}

TEST_CASE("first_steps examples") {
  auto fs = first_steps(A("a"));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].step == pat({"a"}));
  CHECK(fs[0].done());

  fs = first_steps(ActionExpr::sequence(A("a"), A("b")));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].step == pat({"a"}));
  REQUIRE(fs[0].residual);
  CHECK(*fs[0].residual == A("b"));

  fs = first_steps(ActionExpr::choice(ActionExpr::concurrent(A("a"), A("b")), A("c")));
  const std::vector<FirstStep> want = {{pat({"a", "b"}), std::nullopt},
                                       {pat({"c"}), std::nullopt}};
  CHECK(fs == want);

  CHECK(first_steps(ActionExpr::impossible()).empty());
  fs = first_steps(ActionExpr::skip());
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].step.wildcard);
  CHECK(fs[0].step.atoms.empty());

  CHECK(first_steps(ActionExpr::sequence(A("a"), ActionExpr::impossible())).empty());
  CHECK_THROWS_AS(first_steps(ActionExpr::star(A("a"))), std::invalid_argument);
  CHECK_THROWS_AS(first_steps(ActionExpr::negation(A("a"))), std::invalid_argument);
}

TEST_CASE("traces examples") {
  CHECK(traces(A("a")) == std::set<Trace>{{pat({"a"})}});
  CHECK(traces(ActionExpr::sequence(A("a"), ActionExpr::choice(A("b"), A("c")))) ==
        std::set<Trace>{{pat({"a"}), pat({"b"})}, {pat({"a"}), pat({"c"})}});
  CHECK(traces(ActionExpr::impossible()).empty());
  CHECK(traces(ActionExpr::concurrent(ActionExpr::sequence(A("a"), A("b")), A("c"))) ==
        std::set<Trace>{{pat({"a", "c"}), pat({"b"})}});
  CHECK_THROWS_AS(traces(ActionExpr::star(ActionExpr::skip())), std::invalid_argument);
}

TEST_CASE("first_steps closure equals traces, exhaustive") {
  std::vector<ActionExpr> leaves = {ActionExpr::impossible(), ActionExpr::skip(), A("a"),
                                    A("b"), A("c")};
  const auto all = all_actions(leaves, 2);
  CHECK(all.size() > 10000);
  std::size_t checked = 0;
  for (const auto& e : all) {
    INFO(checked);
    REQUIRE(closure(e) == traces(e));
    ++checked;
  }
}

TEST_CASE("first_steps closure equals traces, random deep expressions") {
  Rng rng(11);
  testing::ActionGen g;
  g.atoms = atoms({"a", "b", "c", "d"});
  g.max_depth = 4;
  for (int i = 0; i < 3000; ++i) {
    const auto e = random_action(rng, g);
    REQUIRE(closure(e) == traces(e));
  }
}

TEST_CASE("choice unions decompositions and sequence concatenates traces") {
  Rng rng(12);
  testing::ActionGen g;
  g.atoms = atoms({"a", "b", "c"});
  g.max_depth = 3;
  for (int i = 0; i < 2000; ++i) {
    const auto x = random_action(rng, g);
    const auto y = random_action(rng, g);

    std::set<FirstStep> u;
    for (const auto& fs : first_steps(x)) u.insert(fs);
    for (const auto& fs : first_steps(y)) u.insert(fs);
    const auto got = first_steps(ActionExpr::choice(x, y));
    CHECK(std::set<FirstStep>(got.begin(), got.end()) == u);

    std::set<Trace> cat;
    for (const auto& t1 : traces(x)) {
      for (const auto& t2 : traces(y)) {
        Trace t = t1;
        t.insert(t.end(), t2.begin(), t2.end());
        cat.insert(t);
      }
    }
    CHECK(traces(ActionExpr::sequence(x, y)) == cat);
  }
}

TEST_CASE("step_satisfies") {
  const ActionStep ab(AtomSet{AtomicAction("a"), AtomicAction("b")});
  const ActionStep a(AtomSet{AtomicAction("a")});
  const ActionStep c(AtomSet{AtomicAction("c")});
  CHECK(step_satisfies(ab, AtomSet{AtomicAction("a")}, false));
  CHECK_FALSE(step_satisfies(a, AtomSet{AtomicAction("a"), AtomicAction("b")}, false));
  CHECK(step_satisfies(c, AtomSet{}, true));
  CHECK_THROWS_AS(ActionStep(AtomSet{}), std::invalid_argument);
}

TEST_CASE("mutually_exclusive") {
  MutexRelation m;
  m.add(AtomicAction("open_desk"), AtomicAction("close_desk"));
  CHECK(mutually_exclusive({AtomicAction("open_desk")}, {AtomicAction("close_desk")}, m));
  CHECK(m.contains(AtomicAction("close_desk"), AtomicAction("open_desk")));
  CHECK_FALSE(mutually_exclusive({AtomicAction("a")}, {AtomicAction("b")}, MutexRelation{}));

  MutexRelation bd;
  bd.add(AtomicAction("b"), AtomicAction("d"));
  const auto s1 = AtomSet{AtomicAction("a"), AtomicAction("b")};
  const auto s2 = AtomSet{AtomicAction("c"), AtomicAction("d")};
  CHECK(mutually_exclusive(s1, s2, bd));
  CHECK_FALSE(bd.admits(AtomSet{AtomicAction("b"), AtomicAction("d")}));
  CHECK(bd.admits(s1));
  CHECK_THROWS_AS(bd.add(AtomicAction("a"), AtomicAction("a")), std::invalid_argument);
}

TEST_CASE("mutually_exclusive is symmetric") {
  Rng rng(13);
  const auto pool = atoms({"a", "b", "c", "d"});
  auto subset = [&] {
    AtomSet s;
    for (const auto& a : pool) {
      if (rng() & 1) s.insert(a);
    }
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    MutexRelation m;
    const auto x = pool[rng() % 4];
    const auto y = pool[rng() % 4];
    if (x != y) m.add(x, y);
    const auto s1 = subset();
    const auto s2 = subset();
    CHECK(mutually_exclusive(s1, s2, m) == mutually_exclusive(s2, s1, m));
  }
}

}  // TEST_SUITE
