#include <doctest.h>

#include "generators.hpp"
#include "hyperluk/corpus.hpp"
#include "hyperluk/error.hpp"
#include "hyperluk/parser.hpp"
#include "hyperluk/search.hpp"
#include "hyperluk/serialize.hpp"

using namespace hyperluk;

namespace {

SearchOutcome run(const std::string& text, const Tactic& tactic = round_robin_tactic()) {
  Signature sig;
  Hypersequent h = parse_hypersequent(text, sig);
  return prove(h, tactic, {}, {}, sig);
}

bool uses_term(const NodePtr& node, RuleId rule, const Term& t) {
  if (node->application && node->application->rule == rule && node->application->proper_term == t) return true;
  for (const auto& c : node->children) {
    if (uses_term(c, rule, t)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("identity on a closed atom") {
  SearchOutcome out = run("=> P(c) -> P(c)");
  REQUIRE(out.status == SearchStatus::Proved);
  REQUIRE(out.proof.has_value());
  CHECK(check_proof(*out.proof).ok);
  CHECK(height(*out.proof) >= 1);
  CHECK(height(*out.proof) <= 2);
  CHECK(out.proof->root->application->rule == RuleId::ImpRight);
}

TEST_CASE("universal instance is found with the constant") {
  SearchOutcome out = run("=> (forall x. P(x)) -> P(c)");
  REQUIRE(out.status == SearchStatus::Proved);
  CHECK(check_proof(*out.proof).ok);
  CHECK(uses_term(out.proof->root, RuleId::AllLeft, Term::apply("c")));
}

TEST_CASE("falsum is exhausted by search and refuted by the decider") {
  SearchOutcome out = run("=> 0");
  CHECK(out.status == SearchStatus::Exhausted);
  CHECK_FALSE(out.proof.has_value());
  Decision d = decide_quantifier_free(parse_hypersequent("=> 0"));
  CHECK_FALSE(d.valid);
  REQUIRE(d.witness.has_value());
}

TEST_CASE("the Lukasiewicz axiom is proved and survives sampling") {
  SearchOutcome out = run("=> ((A -> B) -> B) -> ((B -> A) -> A)");
  REQUIRE(out.status == SearchStatus::Proved);
  CHECK(check_proof(*out.proof).ok);
  CHECK_FALSE(random_countermodel_search(out.proof->root->hypersequent, {}).has_value());
}

TEST_CASE("budget exhaustion is reported with statistics") {
  SearchBudget budget;
  budget.max_backward_applications = 3;
  Signature sig;
  Hypersequent h = parse_hypersequent("=> P(c) -> forall x. P(x)", sig);
  SearchOutcome out = prove(h, round_robin_tactic(), {}, budget, sig);
  CHECK(out.status == SearchStatus::Exhausted);
  CHECK(out.stats.applications <= 4);
}

TEST_CASE("decider examples") {
  Decision valid = decide_quantifier_free(parse_hypersequent("=> A -> (B -> A)"));
  CHECK(valid.valid);
  REQUIRE(valid.proof.has_value());
  CHECK(check_proof(*valid.proof).ok);

  Decision half = decide_quantifier_free(parse_hypersequent("=> 1/2 -> A"));
  CHECK_FALSE(half.valid);
  REQUIRE(half.atom_witness.has_value());
  CHECK(half.atom_witness->at("A") < Rational(1, 2));
  REQUIRE(half.witness.has_value());
  CHECK(eval_formula(parse_formula("A"), half.witness->model, half.witness->valuation) < Rational(1, 2));

  Decision ax = decide_quantifier_free(parse_hypersequent("A => A"));
  CHECK(ax.valid);
  CHECK(ax.applications == 0);
  CHECK(height(*ax.proof) == 0);

  CHECK_THROWS_AS(decide_quantifier_free(parse_hypersequent("=> forall x. P(x)")), RuleError);
}

TEST_CASE("decider verdicts are verified and exclusive") {
  testgen::Gen g(61);
  std::size_t valid = 0, refuted = 0;
  for (int i = 0; i < 300; ++i) {
    Hypersequent h = testgen::random_qf_hypersequent(g, 3, 2);
    Decision d = decide_quantifier_free(h);
    if (d.valid) {
      ++valid;
      CHECK(check_proof(*d.proof).ok);
      CHECK_FALSE(d.witness.has_value());
      CHECK_FALSE(testgen::grid_refutation(h, 4).has_value());
    } else {
      ++refuted;
      CHECK_FALSE(d.proof.has_value());
      for (const auto& s : h.components) CHECK_FALSE(sequent_true(s, d.witness->model, d.witness->valuation));
    }
  }
  CHECK(valid > 20);
  CHECK(refuted > 20);
}

TEST_CASE("candidate terms are exhaustive and ordered by depth") {
  Signature sig;
  Hypersequent h = parse_hypersequent("=> P(c, f(d))", sig);
  auto terms = candidate_terms(h, sig, 1);
  std::vector<std::string> texts;
  for (const auto& t : terms) texts.push_back(to_string(t));
  CHECK(texts == std::vector<std::string>{"c", "d", "f(c)", "f(d)"});
  CHECK(candidate_terms(h, sig, 2).size() == 4 + 2);
  Signature empty;
  auto none = candidate_terms(parse_hypersequent("=> forall x. P(x)"), empty, 2);
  REQUIRE(none.size() == 1);
  CHECK(to_string(none[0]) == "c0");
  Signature binary;
  auto pairs = candidate_terms(parse_hypersequent("=> P(g(c, c))", binary), binary, 1);
  CHECK(pairs.size() == 2);
}

TEST_CASE("search is deterministic") {
  for (const auto& e : standard_corpus()) {
    if (!e.theorem) continue;
    SearchOutcome a = run(e.hypersequent);
    SearchOutcome b = run(e.hypersequent);
    REQUIRE(a.proof.has_value());
    REQUIRE(b.proof.has_value());
    CHECK(proof_to_json(*a.proof).dump() == proof_to_json(*b.proof).dump());
    CHECK(a.stats.applications == b.stats.applications);
  }
}

TEST_CASE("every registry tactic proves the corpus theorems") {
  for (const auto& tactic : fair_tactics_registry()) {
    for (const auto& e : standard_corpus()) {
      if (!e.theorem) continue;
      SearchOutcome out = run(e.hypersequent, tactic);
      INFO(tactic.name << " on " << e.hypersequent);
      CHECK(out.status == SearchStatus::Proved);
      if (out.proof) CHECK(check_proof(*out.proof).ok);
    }
  }
}

TEST_CASE("non-theorem controls are not proved") {
  for (const auto& e : standard_corpus()) {
    if (e.theorem) continue;
    SearchOutcome out = run(e.hypersequent);
    CHECK(out.status != SearchStatus::Proved);
  }
}

TEST_CASE("proved outcomes survive countermodel search") {
  testgen::Gen g(62);
  std::size_t proved = 0;
  for (int i = 0; i < 80; ++i) {
    SearchBudget budget;
    budget.max_backward_applications = 5000;
    Signature sig;
    Hypersequent h = parse_hypersequent("=> " + testgen::random_theorem_text(g), sig);
    SearchOutcome out = prove(h, round_robin_tactic(), {}, budget, sig);
    if (out.status != SearchStatus::Proved) continue;
    ++proved;
    CHECK(check_proof(*out.proof).ok);
    SamplingOptions opts;
    opts.samples = 200;
    CHECK_FALSE(random_countermodel_search(h, opts).has_value());
  }
  CHECK(proved > 50);
}
