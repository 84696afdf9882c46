#include <doctest.h>

#include "generators.hpp"
#include "hyperluk/error.hpp"
#include "hyperluk/parser.hpp"
#include "hyperluk/syntax.hpp"

using namespace hyperluk;

namespace {

Formula P(const std::string& t) { return Formula::predicate("P", {Term::apply(t)}); }

}  // namespace

TEST_CASE("parse implication hypersequent") {
  Hypersequent h = parse_hypersequent("=> P(c) -> P(c)");
  REQUIRE(h.components.size() == 1);
  CHECK(h.components[0].antecedent.empty());
  REQUIRE(h.components[0].succedent.size() == 1);
  CHECK(h.components[0].succedent[0] == Formula::implies(P("c"), P("c")));
}

TEST_CASE("parse truth constants across components") {
  Hypersequent h = parse_hypersequent("A => 1/2 | 1/2 => A");
  REQUIRE(h.components.size() == 2);
  CHECK(h.components[0].succedent[0] == Formula::constant(Rational(1, 2)));
  CHECK(h.components[1].antecedent[0] == Formula::constant(Rational(1, 2)));
  CHECK(h.components[0].antecedent[0] == Formula::predicate("A"));
}

TEST_CASE("syntax errors carry the position") {
  try {
    parse_hypersequent("=> P(");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_hypersequent("=> 0.5"), ParseError);
  CHECK_THROWS_AS(parse_hypersequent("A"), ParseError);
  CHECK_THROWS_AS(parse_hypersequent("=> 3/2"), Error);
}

TEST_CASE("strict mode rejects unknown symbols and arity mismatches") {
  Signature sig;
  sig.declare_predicate("P", 1);
  sig.declare_function("c", 0);
  CHECK_NOTHROW(parse_hypersequent("=> P(c)", sig, SymbolMode::Strict));
  CHECK_THROWS_AS(parse_hypersequent("=> Q(c)", sig, SymbolMode::Strict), Error);
  CHECK_THROWS_AS(parse_hypersequent("=> P(c, c)", sig, SymbolMode::Strict), Error);
  Signature inferred;
  CHECK_THROWS_AS(parse_hypersequent("=> P(c) -> P(c, c)", inferred), Error);
}

TEST_CASE("implication is right associative and quantifier scope is maximal") {
  Formula f = parse_formula("A -> B -> C");
  CHECK(f == Formula::implies(Formula::predicate("A"), Formula::implies(Formula::predicate("B"), Formula::predicate("C"))));
  Formula g = parse_formula("forall x. P(x) -> P(c)");
  REQUIRE(g.kind() == Formula::Kind::Forall);
  CHECK(g.body().kind() == Formula::Kind::Implies);
  Formula h = parse_formula("(forall x. P(x)) -> P(c)");
  CHECK(h.kind() == Formula::Kind::Implies);
}

TEST_CASE("substitution leaves bound occurrences alone") {
  Term c = Term::apply("c");
  // Unbound lowercase names parse as constants, so x is bound first.
  Formula f = parse_formula("forall x. P(x) -> forall x. Q(x)").body();
  CHECK(substitute(f, "x", c) == parse_formula("P(c) -> forall x. Q(x)"));
  Formula g = parse_formula("forall x. exists y. R(x, y)").body();
  CHECK(substitute(g, "x", Term::apply("f", {c})) == parse_formula("exists y. R(f(c), y)"));
  Formula h = parse_formula("forall y. P(y)").body();
  CHECK(substitute(h, "x", c) == h);
  CHECK_THROWS(substitute(f, "x", Term::variable("z")));
}

TEST_CASE("substitution is idempotent once the variable is gone") {
  testgen::Gen g(21);
  for (int i = 0; i < 200; ++i) {
    std::string text = testgen::random_theorem_text(g);
    Formula f = parse_formula(text);
    Term t = Term::apply(g.coin() ? "c" : "d");
    Formula once = substitute(f, "x", t);
    if (!free_variables(once).count("x")) CHECK(substitute(once, "x", t) == once);
  }
}

TEST_CASE("fresh symbols use the lowest unused index") {
  CHECK(fresh_symbol(FreshKind::SemiPropType1, {"p1"}) == "p2");
  CHECK(fresh_symbol(FreshKind::Parameter, {}) == "a1");
  CHECK(fresh_symbol(FreshKind::SemiPropType0, {"q1", "q2", "q3"}) == "q4");
  CHECK(fresh_symbol(FreshKind::SemiPropType0, {"q2"}) == "q1");
}

TEST_CASE("fresh symbols never collide, exhaustively over small sets") {
  const std::vector<std::string> pool = {"p1", "p2", "p3", "q1", "q2", "a1", "a2", "a3", "c"};
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    std::set<std::string> used;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) used.insert(pool[i]);
    }
    for (FreshKind k : {FreshKind::SemiPropType0, FreshKind::SemiPropType1, FreshKind::Parameter}) {
      std::string s = fresh_symbol(k, used);
      CHECK(!used.count(s));
      CHECK(is_reserved_name(s));
      CHECK(reserved_kind(s) == k);
      CHECK(fresh_symbol(k, used) == s);
    }
  }
}

TEST_CASE("resolve addresses members") {
  Hypersequent h = parse_hypersequent("A, B => C");
  CHECK(resolve(h, {0, Side::Antecedent, 1}) == Formula::predicate("B"));
  Hypersequent two = parse_hypersequent("=> | A =>");
  CHECK(resolve(two, {1, Side::Antecedent, 0}) == Formula::predicate("A"));
  CHECK_THROWS_AS(resolve(two, {5, Side::Succedent, 0}), OccurrenceError);
  CHECK_THROWS_AS(resolve(h, {0, Side::Succedent, 1}), OccurrenceError);
}

TEST_CASE("eligibility of occurrences") {
  CHECK(is_non_atomic_rpl(parse_formula("A -> B")));
  CHECK_FALSE(is_non_atomic_rpl(parse_formula("A")));
  CHECK_FALSE(is_non_atomic_rpl(parse_formula("p1 -> A")));
  CHECK(is_prenex(parse_formula("forall x. exists y. (P(x) -> P(y))")));
  CHECK_FALSE(is_prenex(parse_formula("(forall x. P(x)) -> A")));
}

TEST_CASE("print then parse round trips") {
  testgen::Gen g(22);
  for (int i = 0; i < 300; ++i) {
    Hypersequent h = i % 2 ? testgen::random_qf_hypersequent(g) : testgen::random_atomic_hypersequent(g);
    Hypersequent back = parse_hypersequent(to_string(h));
    CHECK(identical(back, h));
  }
  for (int i = 0; i < 200; ++i) {
    Formula f = parse_formula(testgen::random_theorem_text(g));
    CHECK(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("multiset equality ignores component and member order") {
  testgen::Gen g(23);
  for (int i = 0; i < 200; ++i) {
    Hypersequent h = testgen::random_qf_hypersequent(g, 4);
    Hypersequent p = h;
    std::shuffle(p.components.begin(), p.components.end(), g.engine());
    for (auto& s : p.components) {
      std::shuffle(s.antecedent.begin(), s.antecedent.end(), g.engine());
      std::shuffle(s.succedent.begin(), s.succedent.end(), g.engine());
    }
    CHECK(p == h);
    CHECK(canonical(p) == canonical(h));
    CHECK(identical(canonical(p), canonical(h)));
  }
  CHECK_FALSE(parse_hypersequent("A => B") == parse_hypersequent("B => A"));
  CHECK_FALSE(parse_hypersequent("A, A => ") == parse_hypersequent("A => "));
}
