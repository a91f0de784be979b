#include <string>

#include "anacon/cl_syntax.hpp"
#include "anacon/error.hpp"
#include "anacon/restricted_english.hpp"
#include "case_study.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace anacon;
using anacon::testing::atoms;
using anacon::testing::Rng;

namespace {

ActionExpr A(const char* n) { return ActionExpr::atom(n); }

ActionExpr always() { return ActionExpr::star(ActionExpr::skip()); }

}  // namespace

TEST_SUITE("restricted_english") {

TEST_CASE("item 1 splits the compound name") {
  const auto c = parse_re(
      "( If (two_hours_before_the_flight_leaves) then (It is mandatory to "
      "(open_the_check_in_desk_and_request_the_passenger_manifest) if not "
      "(open_the_check_in_desk_and_request_the_passenger_manifest) then (It is mandatory "
      "to (pay_a_fine)) ) )");
  CHECK(c == Clause::box(A("two_hours_before_the_flight_leaves"),
                         Clause::obligation(ActionExpr::concurrent(
                                                A("open_the_check_in_desk"),
                                                A("request_the_passenger_manifest")),
                                            Clause::obligation(A("pay_a_fine")))));
}

TEST_CASE("item 2 temporal form") {
  const auto c = parse_re(
      "( (When) ( If (opening_the_desk_with_the_passenger_manifest) then (It is mandatory "
      "to (reply_to_the_passenger_manifest_request) if not "
      "(reply_to_the_passenger_manifest_request) then (It is mandatory to (pay_a_fine))) ))");
  CHECK(c == Clause::box(always(),
                         Clause::box(A("opening_the_desk_with_the_passenger_manifest"),
                                     Clause::obligation(A("reply_to_the_passenger_manifest_request"),
                                                        Clause::obligation(A("pay_a_fine"))))));
}

TEST_CASE("permission and constants") {
  CHECK(parse_re("( It is permitted to ( suspend_the_service ) )") ==
        Clause::permission(A("suspend_the_service")));
  CHECK(parse_re("( trivially satisfied )") == Clause::top());
  CHECK(parse_re("( contract violated )") == Clause::bottom());
}

TEST_CASE("linearization") {
  CHECK(linearize_re(Clause::obligation(A("pay_a_fine"))) ==
        "( It is mandatory to ( pay_a_fine ) )");
  CHECK(linearize_re(Clause::prohibition(A("fi"), Clause::permission(A("s")))) ==
        "( It is prohibited to ( fi ) if ( fi ) then ( It is permitted to ( s ) ) )");
  CHECK(linearize_re(Clause::top()) == "( trivially satisfied )");
  CHECK(linearize_re(Clause::box(always(), Clause::box(A("g"), Clause::permission(A("a"))))) ==
        "( ( Always ) ( If ( g ) then ( It is permitted to ( a ) ) ) )");
}

TEST_CASE("action keywords") {
  CHECK(parse_re("( It is mandatory to ( a and b followed-by c or d ) )") ==
        Clause::obligation(ActionExpr::choice(
            ActionExpr::sequence(ActionExpr::concurrent(A("a"), A("b")), A("c")), A("d"))));
  CHECK(parse_re("( If ( a any-number-of-times ) then ( It is permitted to ( b ) ) )") ==
        Clause::box(ActionExpr::star(A("a")), Clause::permission(A("b"))));
  CHECK(parse_re("( It is permitted to ( not a ) )") ==
        Clause::permission(ActionExpr::negation(A("a"))));
  CHECK(parse_re("( It is mandatory to ( x_or_y_and_z ) )") ==
        Clause::obligation(ActionExpr::concurrent(ActionExpr::choice(A("x"), A("y")), A("z"))));
}

TEST_CASE("lexicon keeps a declared name whole") {
  const std::set<std::string> lex = {"cash_and_carry"};
  EnglishParseOptions opts;
  opts.lexicon = &lex;
  CHECK(parse_re("( It is mandatory to ( cash_and_carry ) )", opts) ==
        Clause::obligation(A("cash_and_carry")));
  CHECK(parse_re("( It is mandatory to ( cash_and_carry ) )") ==
        Clause::obligation(ActionExpr::concurrent(A("cash"), A("carry"))));
}

TEST_CASE("the four temporal words give one tree") {
  const char* body = "( If ( g ) then ( It is prohibited to ( a ) ) ) )";
  const auto ref = parse_re(std::string("( ( Always ) ") + body);
  for (const char* w : {"After", "When", "Before"}) {
    CHECK(parse_re(std::string("( ( ") + w + " ) " + body) == ref);
  }
  CHECK(ref.kind() == Clause::Kind::Box);
  CHECK(ref.is_always_box());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse_re("( It is mandatory to ( a ) if not ( b ) then ( It is "
                           "mandatory to ( c ) ) )"),
                  ParseError);
  CHECK_THROWS_AS(parse_re("( It is prohibited to ( a ) if ( b ) then ( trivially "
                           "satisfied ) )"),
                  ParseError);
  CHECK_THROWS_AS(parse_re("( It is required to ( a ) )"), ParseError);
  CHECK_THROWS_AS(parse_re("( It is mandatory to ( a any-number-of-times ) )"), ParseError);
  CHECK_THROWS_AS(parse_re(""), ParseError);
  CHECK_THROWS_AS(parse_re("( It is mandatory to ( a ) ) extra"), ParseError);
  try {
    EnglishParseOptions opts;
    opts.first_line = 40;
    parse_re("( It is mandatory to ( a )\n  oops )", opts);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position().line == 41);
  }
}

TEST_CASE("case-study clauses match the expected symbolic output") {
  for (const auto& item : testing::case_study_items()) {
    INFO("item " << item.number);
    CHECK(testing::translate_item(item) == testing::respace_cl(item.expected_cl));
    CHECK(testing::translate_item_ast(item) == parse_cl(item.expected_cl));
  }
}

TEST_CASE("round trip through English") {
  Rng rng(31);
  testing::ClauseGen g;
  g.actions.atoms = atoms({"a", "b", "c", "pay_a_fine"});
  g.actions.allow_negation = true;
  g.actions.max_depth = 3;
  g.max_depth = 6;
  for (int i = 0; i < 1000; ++i) {
    const auto c = random_clause(rng, g);
    const auto text = linearize_re(c);
    INFO(text);
    REQUIRE(parse_re(text) == c);
  }
}

TEST_CASE("English and symbolic syntaxes share one tree") {
  Rng rng(32);
  testing::ClauseGen g;
  g.actions.atoms = atoms({"a", "b", "c"});
  g.max_depth = 4;
  for (int i = 0; i < 500; ++i) {
    const auto c = random_clause(rng, g);
    const auto english = linearize_re(c);
    const auto symbolic = print_cl(c);
    CHECK(print_cl(parse_re(english)) == print_cl(parse_cl(symbolic)));
  }
}

}  // TEST_SUITE
