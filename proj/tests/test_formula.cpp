#include "doctest.h"

#include <map>
#include <set>

#include "gnc/godel.hpp"
#include "gnc/parse.hpp"
#include "gnc/pool.hpp"
#include "gnc/print.hpp"

#include "gen.hpp"

using namespace gnc;

TEST_CASE("cantor pairing basics") {
  CHECK(cantor_pair(0, 0) == 0);
  // (2+3)(2+3+1)/2 + 3
  CHECK(cantor_pair(2, 3) == 18);
  auto [x, y] = cantor_unpair(18);
  CHECK(x == 2);
  CHECK(y == 3);
}

TEST_CASE("cantor pairing is a bijection on [0,50]^2") {
  std::set<Nat> seen;
  for (unsigned x = 0; x <= 50; ++x) {
    for (unsigned y = 0; y <= 50; ++y) {
      Nat z = cantor_pair(x, y);
      CHECK(seen.insert(z).second);
      auto [bx, by] = cantor_unpair(z);
      CHECK(bx == x);
      CHECK(by == y);
    }
  }
}

TEST_CASE("parse: operator application and implication") {
  FormulaPtr f = parse_formula("K(p1) -> p1");
  REQUIRE(f->tag == Formula::Tag::Imp);
  CHECK(f->a->tag == Formula::Tag::ModApp);
  CHECK(f->a->name == "K");
  CHECK(formula_eq(f->a->a, mk_atom("p1")));
  CHECK(formula_eq(f->b, mk_atom("p1")));
}

TEST_CASE("parse: diamond is sugar for ~Box(~.)") {
  FormulaPtr f = parse_formula("Dia(K(q))");
  FormulaPtr expect = mk_not(mk_modapp("Box", mk_not(mk_modapp("K", mk_atom("q")))));
  CHECK(formula_eq(f, expect));
  CHECK(print_formula(f) == "Dia(K(q))");
}

TEST_CASE("parse: predicate quotation") {
  FormulaPtr f = parse_formula("K{p1 -> p1}");
  FormulaPtr expect =
      mk_predapp("K", {mk_quote(mk_imp(mk_atom("p1"), mk_atom("p1")))});
  CHECK(formula_eq(f, expect));
}

TEST_CASE("parse: quantifiers, terms, T-sugar") {
  CHECK(formula_eq(parse_formula("T3"),
                   mk_or(mk_or(mk_atom("p1"), mk_atom("p2")), mk_atom("p3"))));
  FormulaPtr f = parse_formula("forall x. InW(pair(x, quote{p1}), 5)");
  REQUIRE(f->tag == Formula::Tag::Forall);
  CHECK(f->a->tag == Formula::Tag::PredApp);
  CHECK(f->a->args.size() == 2);
  CHECK(free_vars(f).empty());
  // precedence: ~ > & > | > -> with -> right-associative
  CHECK(formula_eq(parse_formula("~p1 & p2 | q -> r -> Bot"),
                   mk_imp(mk_or(mk_and(mk_not(mk_atom("p1")), mk_atom("p2")),
                                mk_atom("q")),
                          mk_imp(mk_atom("r"), mk_bot()))));
}

TEST_CASE("parse errors carry position") {
  try {
    parse_formula("p1 & (q |");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }
}

TEST_CASE("print examples") {
  CHECK(print_formula(mk_imp(mk_atom("p1"), mk_atom("p1"))) == "p1 -> p1");
  CHECK(print_formula(mk_modapp("K", mk_or(mk_atom("p1"), mk_atom("p2")))) ==
        "K(p1 | p2)");
  FormulaPtr quoted = mk_predapp("K", {mk_quote(mk_atom("p1"))});
  CHECK(print_formula(quoted) == "K{p1}");
}

TEST_CASE("gn: distinct atoms, round-trip stability, golden value") {
  CHECK(gn(mk_atom("p1")) != gn(mk_atom("p2")));
  FormulaPtr f = parse_formula("K(p1 -> p2) <-> ~Psi");
  CHECK(gn(f) == gn(parse_formula(print_formula(f))));
  // frozen: computed once from the declared encoding
  // pair(25, pair(gn(p1), gn(p1))) with gn(p1) = pair(20, 1 + (256*'p'+'1'))
  Nat gp1 = cantor_pair(20, string_code("p1"));
  Nat expect = cantor_pair(25, cantor_pair(gp1, gp1));
  CHECK(gn(parse_formula("p1 -> p1")) == expect);
  CHECK(gn(parse_formula("p1 -> p1")).str() ==
        "780209651012983453723014819622697333605");
}

TEST_CASE("gn decodes back to the same formula") {
  testgen::Gen g(2024);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = g.formula(4);
    auto back = gn_decode(gn(f));
    REQUIRE(back.has_value());
    CHECK(formula_eq(*back, f));
  }
  CHECK_FALSE(gn_decode(Nat(2)).has_value());
}

TEST_CASE("normalize: quotes become numerals, idempotent") {
  FormulaPtr f = mk_predapp("K", {mk_quote(mk_atom("p1"))});
  FormulaPtr n = normalize(f);
  REQUIRE(n->tag == Formula::Tag::PredApp);
  REQUIRE(n->args.size() == 1);
  CHECK(n->args[0]->tag == Term::Tag::Numeral);
  CHECK(n->args[0]->num == gn(mk_atom("p1")));
  CHECK(formula_eq(normalize(n), n));
  CHECK_FALSE(contains_quote(n));

  FormulaPtr plain = parse_formula("p1 & ~p2");
  CHECK(formula_eq(normalize(plain), plain));
}

TEST_CASE("normalize: numerals and Succ chains agree") {
  TermPtr chain = mk_succ(mk_succ(mk_succ(mk_zero())));
  CHECK(term_eq(normalize_term(chain), mk_numeral(3)));
  CHECK(print_term(normalize_term(chain)) == "3");
  CHECK(term_eq(normalize_term(mk_numeral(0)), mk_zero()));
}

TEST_CASE("round-trip: parse . print = id on 10000 random formulas") {
  testgen::Gen g(7);
  std::map<std::string, int> sizes;
  for (int i = 0; i < 10000; ++i) {
    FormulaPtr f = g.formula(1 + g.pick(6));
    std::string text = print_formula(f);
    FormulaPtr back;
    try {
      back = parse_formula(text);
    } catch (const ParseError& e) {
      CAPTURE(text);
      FAIL("parse error: " << e.what());
    }
    if (!formula_eq(back, f)) {
      CAPTURE(text);
      FAIL("round-trip mismatch");
    }
  }
}

TEST_CASE("gn is injective over a 10000-formula pool") {
  testgen::Gen g(11);
  std::map<Nat, FormulaPtr> seen;
  for (int i = 0; i < 10000; ++i) {
    FormulaPtr f = g.formula(1 + g.pick(6));
    auto [it, inserted] = seen.emplace(gn(f), f);
    if (!inserted) CHECK(formula_eq(it->second, f));
  }
}

TEST_CASE("normalize commutes with print/parse round-trips") {
  testgen::Gen g(13);
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = g.formula(4);
    FormulaPtr n = normalize(f);
    CHECK(formula_eq(parse_formula(print_formula(n)), n));
    CHECK(formula_eq(normalize(parse_formula(print_formula(f))), n));
  }
}

TEST_CASE("diamond sugar: Dia(f) parses like ~Box(~f)") {
  testgen::Gen g(17);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = g.formula(3);
    std::string body = print_formula(f);
    CHECK(formula_eq(parse_formula("Dia(" + body + ")"),
                     parse_formula("~Box(~(" + body + "))")));
  }
}

TEST_CASE("subformula_pool: closure and growth") {
  auto only = [](std::vector<FormulaPtr> v) { return FormulaSet(v.begin(), v.end()); };

  auto p0 = only(subformula_pool({mk_atom("p1")}, 0));
  CHECK(p0.size() == 1);
  CHECK(p0.count(mk_atom("p1")) == 1);

  auto pk = only(subformula_pool({mk_modapp("K", mk_atom("p1"))}, 0));
  CHECK(pk.size() == 2);
  CHECK(pk.count(mk_atom("p1")) == 1);
  CHECK(pk.count(mk_modapp("K", mk_atom("p1"))) == 1);

  std::size_t prev = 0;
  for (unsigned d = 0; d <= 3; ++d) {
    auto pool = subformula_pool({parse_formula("K(p1) -> ~p2")}, d);
    CHECK(pool.size() > prev);
    prev = pool.size();
  }
}
