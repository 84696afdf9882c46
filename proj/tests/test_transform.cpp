#include <doctest.h>

#include "generators.hpp"
#include "hyperluk/error.hpp"
#include "hyperluk/parser.hpp"
#include "hyperluk/search.hpp"
#include "hyperluk/serialize.hpp"
#include "hyperluk/transform.hpp"

using namespace hyperluk;

namespace {

Hypersequent H(const std::string& text) { return parse_hypersequent(text); }

ProofTree proved(const std::string& text, const Tactic& tactic = round_robin_tactic()) {
  Signature sig;
  Hypersequent h = parse_hypersequent(text, sig);
  SearchOutcome out = prove(h, tactic, {}, {}, sig);
  REQUIRE_MESSAGE(out.proof.has_value(), text);
  return *out.proof;
}

ProofTree axiom(const std::string& text) {
  Hypersequent h = H(text);
  REQUIRE(is_axiom(h).axiom);
  return ProofTree{make_leaf(h), TreeStatus::CheckedProof};
}

ProofTree built(const std::string& text, const std::vector<std::pair<NodePath, OccurrenceRef>>& steps,
                const std::vector<std::optional<Term>>& terms = {}) {
  ProofTree t{make_leaf(H(text)), TreeStatus::SearchTree};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    t = backward_apply(t, steps[i].first, steps[i].second, i < terms.size() ? terms[i] : std::nullopt);
  }
  REQUIRE_MESSAGE(check_proof(t).ok, check_proof(t).message);
  return certify(t.root);
}

std::multiset<std::string> principal_formulas(const NodePtr& n) {
  std::multiset<std::string> out;
  if (n->application) out.insert(to_string(resolve(n->hypersequent, n->application->principal)));
  for (const auto& c : n->children) {
    auto sub = principal_formulas(c);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

void collect_paths(const NodePtr& n, NodePath& path, std::vector<NodePath>& out) {
  out.push_back(path);
  for (std::size_t i = 0; i < n->children.size(); ++i) {
    path.push_back(i);
    collect_paths(n->children[i], path, out);
    path.pop_back();
  }
}

std::vector<NodePath> all_paths(const NodePtr& n) {
  std::vector<NodePath> out;
  NodePath p;
  collect_paths(n, p, out);
  return out;
}

std::vector<OccurrenceRef> compound_occurrences(const Hypersequent& h) {
  std::vector<OccurrenceRef> out;
  for (std::size_t c = 0; c < h.components.size(); ++c) {
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      const auto& fs = h.components[c].side(side);
      for (std::size_t m = 0; m < fs.size(); ++m) {
        if (is_non_atomic_rpl(fs[m])) out.push_back({c, side, m});
      }
    }
  }
  return out;
}

ClosedLeaf axiom_closed() {
  return [](const Hypersequent& h) { return is_axiom(h).axiom; };
}

std::vector<ProofTree> random_proofs(std::uint64_t seed, std::size_t n) {
  testgen::Gen g(seed);
  return testgen::random_checking_proofs(g, n);
}

bool is_mid(const ProofTree& t) { return is_mid_hypersequent(t.root); }

}  // namespace

// ------------------------------------------------------------- weaken

TEST_CASE("weakening appends a component and keeps the height") {
  ProofTree a = axiom("A => A");
  ProofTree w = weaken(a, parse_sequent("=> 0"));
  CHECK(identical(w.root->hypersequent, H("A => A | => 0")));
  CHECK(height(w) == 0);
  CHECK(check_proof(w).ok);
}

TEST_CASE("weakening renames clashing proper symbols") {
  ProofTree p = proved("=> (forall x. P(x)) -> P(c)");
  ProofTree w = weaken(p, parse_sequent("p1 => A"));
  CHECK(check_proof(w).ok);
  CHECK(height(w) == height(p));
  CHECK(identical(w.root->hypersequent, H("=> (forall x. P(x)) -> P(c) | p1 => A")));
  for (const auto& path : all_paths(w.root)) {
    const auto& app = node_at(w.root, path).application;
    if (app && app->proper_semiprop) CHECK(*app->proper_semiprop != "p1");
  }
}

TEST_CASE("weakening twice equals weakening by both components") {
  ProofTree p = proved("=> A -> (B -> A)");
  ProofTree twice = weaken(weaken(p, parse_sequent("A =>")), parse_sequent("=> B"));
  ProofTree both{adjoin_context(p.root, H("A => | => B")), TreeStatus::CheckedProof};
  CHECK(identical(twice.root->hypersequent, both.root->hypersequent));
  CHECK(height(twice) == height(both));
}

// -------------------------------------------------------------- split

TEST_CASE("splitting an axiom") {
  ProofTree a = axiom("A, B => A, B");
  ProofTree s = split(a, SplitSpec{0, {1}, {1}});
  CHECK(identical(s.root->hypersequent, H("A => A | B => B")));
  CHECK(check_proof(s).ok);
  CHECK(height(s) == 0);
}

TEST_CASE("splitting the universal instance proof") {
  ProofTree p = built("forall x. P(x) => P(c)", {{{}, {0, Side::Antecedent, 0}}}, {Term::apply("c")});
  ProofTree s = split(p, SplitSpec{0, {}, {0}});
  CHECK(identical(s.root->hypersequent, H("forall x. P(x) => | => P(c)")));
  CHECK(check_proof(s).ok);
  CHECK(height(s) == height(p));
}

TEST_CASE("degenerate split adds an empty component") {
  ProofTree p = proved("=> A -> A");
  ProofTree s = split(p, SplitSpec{0, {}, {}});
  CHECK(identical(s.root->hypersequent, H("=> A -> A | =>")));
  CHECK(check_proof(s).ok);
  CHECK(height(s) == height(p));
}

TEST_CASE("malformed split specs are rejected") {
  ProofTree a = axiom("A => A");
  CHECK_THROWS_AS(split(a, SplitSpec{3, {}, {}}), TransformError);
  CHECK_THROWS_AS(split(a, SplitSpec{0, {4}, {}}), TransformError);
}

// -------------------------------------------------------------- atoms

TEST_CASE("adding atoms") {
  ProofTree e = axiom("=>");
  ProofTree a = add_atom(e, 0, Atom::predicate("A"));
  CHECK(identical(a.root->hypersequent, H("A => A")));
  ProofTree aa = add_atom(a, 0, Atom::predicate("A"));
  CHECK(identical(aa.root->hypersequent, H("A, A => A, A")));
  CHECK(check_proof(aa).ok);
}

TEST_CASE("adding an atom that clashes with a proper variable") {
  ProofTree p = proved("=> (forall x. P(x)) -> P(c)");
  ProofTree a = add_atom(p, 0, Atom::semiprop("p1", SemiPropSort::Type1));
  CHECK(check_proof(a).ok);
  CHECK(height(a) == height(p));
  CHECK(identical(a.root->hypersequent, H("p1 => (forall x. P(x)) -> P(c), p1")));
}

// ------------------------------------------------------------- invert

TEST_CASE("inverting right implication") {
  ProofTree p = proved("=> (A -> B) -> ((B -> C) -> (A -> C))");
  auto out = invert(p, RuleId::ImpRight, {0, Side::Succedent, 0});
  REQUIRE(out.size() == 2);
  CHECK(identical(out[0].root->hypersequent, H("=>")));
  CHECK(identical(out[1].root->hypersequent, H("A -> B => (B -> C) -> (A -> C)")));
  for (const auto& o : out) {
    CHECK(check_proof(o).ok);
    CHECK(height(o) <= height(p));
  }
}

TEST_CASE("inverting left universal") {
  ProofTree p = proved("=> (forall x. P(x)) -> P(c)");
  auto parts = invert(p, RuleId::ImpRight, {0, Side::Succedent, 0});
  ProofTree q = parts[1];
  auto out = invert(q, RuleId::AllLeft, {0, Side::Antecedent, 0}, InvertOptions{Term::apply("d"), std::nullopt});
  REQUIRE(out.size() == 1);
  CHECK(identical(out[0].root->hypersequent, H("p1 => P(c) | forall x. P(x) => p1 | P(d) => p1")));
  CHECK(check_proof(out[0]).ok);
  CHECK(height(out[0]) <= height(q));
}

TEST_CASE("inverting an axiom gives axioms") {
  ProofTree a = axiom("A -> B => A -> B | =>");
  auto l = invert(a, RuleId::ImpLeft, {0, Side::Antecedent, 0});
  REQUIRE(l.size() == 1);
  CHECK(height(l[0]) == 0);
  CHECK(is_axiom(l[0].root->hypersequent).axiom == true);
  ProofTree b = axiom("=> forall x. P(x) | =>");
  auto r = invert(b, RuleId::AllRight, {0, Side::Succedent, 0});
  REQUIRE(r.size() == 1);
  CHECK(identical(r[0].root->hypersequent, H("=> P(a1) | =>")));
}

TEST_CASE("inversion rejects shape mismatches") {
  ProofTree p = proved("=> A -> A");
  CHECK_THROWS_AS(invert(p, RuleId::ImpLeft, {0, Side::Succedent, 0}), TransformError);
  CHECK_THROWS_AS(invert(p, RuleId::ImpRight, {0, Side::Antecedent, 0}), Error);
}

// ----------------------------------------------------------- contract

TEST_CASE("contracting an axiom") {
  ProofTree c = contract(axiom("A => A | A => A"));
  CHECK(identical(c.root->hypersequent, H("A => A")));
  CHECK_THROWS_AS(contract(axiom("A => A")), TransformError);
}

TEST_CASE("contracting the duplicate of a G1 step") {
  MacroExpansion e = macro_backward_g1(ProofTree{make_leaf(H("=> A -> A")), TreeStatus::SearchTree}, {},
                                       {0, Side::Succedent, 0});
  std::vector<NodePtr> proofs;
  for (const auto& h : e.open_leaves) proofs.push_back(make_leaf(h));
  ProofTree g3 = e.close(proofs);
  CHECK(check_proof(g3).ok);
  CHECK(identical(g3.root->hypersequent, H("=> A -> A")));
  ProofTree direct = proved("=> A -> A");
  CHECK(height(g3) == height(direct));
}

TEST_CASE("contraction with the principal on either copy") {
  ProofTree p = built("forall x. P(x) => P(c)", {{{}, {0, Side::Antecedent, 0}}}, {Term::apply("c")});
  ProofTree twice = weaken(p, parse_sequent("forall x. P(x) => P(c)"));
  REQUIRE(twice.root->application->principal.component == 0);
  ProofTree keep_first{contract_pair(twice.root, 0, 1), TreeStatus::CheckedProof};
  ProofTree keep_second{contract_pair(twice.root, 1, 0), TreeStatus::CheckedProof};
  for (const auto& c : {keep_first, keep_second}) {
    CHECK(check_proof(c).ok);
    CHECK(identical(canonical(c.root->hypersequent), canonical(H("forall x. P(x) => P(c)"))));
    CHECK(height(c) <= height(twice));
  }
}

// ------------------------------------------------------------ permute

TEST_CASE("P1: left implication below right universal") {
  ProofTree p = built("A -> B => forall x. (A -> B)",
                      {{{}, {0, Side::Antecedent, 0}}, {{0}, {0, Side::Succedent, 0}}, {{0, 0}, {0, Side::Succedent, 0}}});
  REQUIRE(classify_permutation(p.root, {}) == PermutationCase::P1);
  ProofTree q = permute(p, {}, PermutationCase::P1);
  CHECK(check_proof(q).ok);
  CHECK(identical(q.root->hypersequent, p.root->hypersequent));
  CHECK(q.root->application->rule == RuleId::AllRight);
  CHECK(q.root->children[0]->application->rule == RuleId::ImpLeft);
  CHECK(principal_formulas(q.root) == principal_formulas(p.root));
}

TEST_CASE("P4: right implication below two right universals with distinct parameters") {
  Hypersequent root = H("=> A -> A | => forall x. (P(x) -> P(x))");
  RuleApplication imp = make_application(root, {0, Side::Succedent, 0});
  auto prems = rule_premises(root, imp);
  std::vector<NodePtr> kids;
  const char* params[] = {"a1", "a2"};
  for (std::size_t i = 0; i < 2; ++i) {
    const Hypersequent& h = prems[i].hypersequent;
    RuleApplication all;
    all.rule = RuleId::AllRight;
    all.principal = {1, Side::Succedent, 0};
    all.proper_parameter = params[i];
    auto top = rule_premises(h, all);
    REQUIRE(is_axiom(top[0].hypersequent).axiom);
    kids.push_back(make_node(h, all, {make_leaf(top[0].hypersequent)}));
  }
  ProofTree p{make_node(root, imp, kids), TreeStatus::CheckedProof};
  REQUIRE(check_proof(p).ok);
  REQUIRE(classify_permutation(p.root, {}) == PermutationCase::P4);
  ProofTree q = permute(p, {}, PermutationCase::P4);
  CHECK(check_proof(q).ok);
  CHECK(identical(q.root->hypersequent, root));
  CHECK(q.root->application->rule == RuleId::AllRight);
  CHECK(q.root->children[0]->application->rule == RuleId::ImpRight);
  CHECK(quantifier_count(q) == 1);
}

TEST_CASE("P1 refuses the excluded pair") {
  Hypersequent root = H("forall y. P(y) => forall x. P(x)");
  ProofTree t{make_leaf(root), TreeStatus::SearchTree};
  t = backward_apply(t, {}, {0, Side::Succedent, 0});
  t = backward_apply(t, {0}, {0, Side::Antecedent, 0}, Term::apply("a1"));
  REQUIRE(check_proof(t).ok);
  ProofTree p = certify(t.root);
  CHECK_FALSE(classify_permutation(p.root, {}).has_value());
  CHECK_THROWS_AS(permute(p, {}, PermutationCase::P1), TransformError);
}

TEST_CASE("P3 requires equal proper terms") {
  Hypersequent root = H("forall x. P(x) => P(c), A -> A");
  RuleApplication imp = make_application(root, {0, Side::Succedent, 1});
  auto prems = rule_premises(root, imp);
  auto with_term = [&](std::size_t i, const std::string& t) {
    const Hypersequent& h = prems[i].hypersequent;
    RuleApplication all = make_application(h, {0, Side::Antecedent, 0}, Term::apply(t));
    auto top = rule_premises(h, all);
    return make_node(h, all, {make_leaf(top[0].hypersequent)});
  };
  ProofTree same{make_node(root, imp, {with_term(0, "c"), with_term(1, "c")}), TreeStatus::CheckedProof};
  REQUIRE(check_proof(same).ok);
  REQUIRE(classify_permutation(same.root, {}) == PermutationCase::P3);
  ProofTree q = permute(same, {}, PermutationCase::P3);
  CHECK(check_proof(q).ok);
  CHECK(q.root->application->rule == RuleId::AllLeft);
  CHECK(quantifier_count(q) == 1);
  CHECK(height(q) == height(same));

  Hypersequent other = H("forall x. P(x) => P(c), A -> A | P(d) => P(d)");
  RuleApplication imp2 = make_application(other, {0, Side::Succedent, 1});
  auto prems2 = rule_premises(other, imp2);
  std::vector<NodePtr> kids;
  const char* terms[] = {"c", "d"};
  for (std::size_t i = 0; i < 2; ++i) {
    const Hypersequent& h = prems2[i].hypersequent;
    RuleApplication all = make_application(h, {0, Side::Antecedent, 0}, Term::apply(terms[i]));
    auto top = rule_premises(h, all);
    REQUIRE(is_axiom(top[0].hypersequent).axiom);
    kids.push_back(make_node(h, all, {make_leaf(top[0].hypersequent)}));
  }
  ProofTree differ{make_node(other, imp2, kids), TreeStatus::CheckedProof};
  REQUIRE(check_proof(differ).ok);
  CHECK_FALSE(classify_permutation(differ.root, {}).has_value());
  CHECK_THROWS_AS(permute(differ, {}, PermutationCase::P3), TransformError);
}

TEST_CASE("permutations preserve roots and principal formulas on random proofs") {
  std::size_t permuted = 0;
  for (const auto& p : random_proofs(81, 60)) {
    for (const auto& path : all_paths(p.root)) {
      auto c = classify_permutation(p.root, path);
      if (!c) continue;
      ProofTree q = permute(p, path, *c);
      CHECK(check_proof(q).ok);
      CHECK(identical(q.root->hypersequent, p.root->hypersequent));
      if (*c == PermutationCase::P1 || *c == PermutationCase::P2) {
        CHECK(principal_formulas(q.root) == principal_formulas(p.root));
        CHECK(height(q) == height(p));
      }
      ++permuted;
    }
  }
  CHECK(permuted > 10);
}

// ------------------------------------------------------ mid-hypersequent

TEST_CASE("an already mid-hypersequent proof is unchanged") {
  ProofTree p = built("forall x. P(x) => P(c)", {{{}, {0, Side::Antecedent, 0}}}, {Term::apply("c")});
  REQUIRE(is_mid(p));
  ProofTree q = to_mid_hypersequent(p);
  CHECK(proof_to_text(q) == proof_to_text(p));
}

TEST_CASE("propositional rule below quantifier rules is lifted") {
  ProofTree p = built("forall x. P(x) => P(c), A -> A",
                      {{{}, {0, Side::Succedent, 1}}, {{0}, {0, Side::Antecedent, 0}}, {{1}, {0, Side::Antecedent, 0}}},
                      {std::nullopt, Term::apply("c"), Term::apply("c")});
  REQUIRE_FALSE(is_mid(p));
  ProofTree q = to_mid_hypersequent(p);
  CHECK(check_proof(q).ok);
  CHECK(is_mid(q));
  CHECK(identical(q.root->hypersequent, p.root->hypersequent));
  CHECK(quantifier_count(q) <= quantifier_count(p));
  CHECK(q.root->application->rule == RuleId::AllLeft);
}

TEST_CASE("interleaved chain pattern with one propositional step") {
  Signature sig;
  Hypersequent h = parse_hypersequent("=> exists x. forall y. exists z. (A -> B(x, y, z)), A -> A", sig);
  ProofTree t{make_leaf(h), TreeStatus::SearchTree};
  t = backward_apply(t, {}, {0, Side::Succedent, 0}, Term::apply("c"));
  t = backward_apply(t, {0}, {0, Side::Succedent, 1});
  REQUIRE(check_proof(t).ok == false);
  CHECK_THROWS_AS(to_mid_hypersequent(ProofTree{t.root, TreeStatus::SearchTree}), TransformError);
  SearchOutcome out = prove(parse_hypersequent("exists x. forall y. P(x) -> P(y) => exists x. forall y. P(x) -> P(y)", sig),
                            quantifier_last_tactic(), {}, {}, sig);
  REQUIRE(out.proof.has_value());
  ProofTree q = to_mid_hypersequent(*out.proof);
  CHECK(check_proof(q).ok);
  CHECK(is_mid(q));
  CHECK(quantifier_count(q) <= quantifier_count(*out.proof));
}

TEST_CASE("non-prenex members are rejected") {
  ProofTree p = proved("=> (forall x. P(x)) -> P(c)");
  CHECK_THROWS_AS(to_mid_hypersequent(p), TransformError);
}

TEST_CASE("mid-hypersequent property on random prenex proofs") {
  testgen::Gen g(82);
  std::size_t done = 0, lifted = 0;
  for (int i = 0; i < 200 && done < 25; ++i) {
    Signature sig;
    Hypersequent h = parse_hypersequent(testgen::random_prenex_text(g), sig);
    SearchBudget budget;
    budget.max_backward_applications = 4000;
    SearchOutcome out = prove(h, quantifier_last_tactic(), {}, budget, sig);
    if (!out.proof) continue;
    ++done;
    lifted += !is_mid(*out.proof);
    ProofTree q = to_mid_hypersequent(*out.proof);
    CHECK(check_proof(q).ok);
    CHECK(is_mid(q));
    CHECK(identical(q.root->hypersequent, h));
    CHECK(quantifier_count(q) <= quantifier_count(*out.proof));
  }
  CHECK(done >= 20);
  CHECK(lifted >= 10);
}

// ------------------------------------------------------------ reorder

TEST_CASE("reordering a right-to-left proof under a leftmost tactic") {
  ProofTree p = built("=> A -> A, B -> B", {{{}, {0, Side::Succedent, 1}},
                                            {{0}, {0, Side::Succedent, 0}},
                                            {{1}, {0, Side::Succedent, 0}}});
  Tactic t = leftmost_aging_tactic();
  REQUIRE_FALSE(conforms_to_tactic(p.root, t, axiom_closed()).conforms);
  ReorderResult r = reorder_by_tactic(p, t);
  CHECK(check_proof(r.proof).ok);
  CHECK(identical(r.proof->hypersequent, p.root->hypersequent));
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace[0].occurrence == OccurrenceRef{0, Side::Succedent, 0});
  CHECK(conforms_to_tactic(r.proof, t, axiom_closed()).conforms);
}

TEST_CASE("reordering an already conforming proof changes nothing") {
  for (const auto& t : fair_tactics_registry()) {
    ProofTree p = proved("=> (A -> B) -> ((B -> C) -> (A -> C))", t);
    ConformanceReport before = conforms_to_tactic(p.root, t, axiom_closed());
    REQUIRE(before.conforms);
    ReorderResult r = reorder_by_tactic(p, t);
    CHECK(r.trace == before.trace);
    CHECK(proof_to_text(ProofTree{r.proof, TreeStatus::CheckedProof}) == proof_to_text(p));
  }
}

TEST_CASE("reordering under a quantifier-last tactic") {
  ProofTree p = proved("=> (forall x. P(x)) -> P(c)", quantifier_first_tactic());
  ReorderResult r = reorder_by_tactic(p, quantifier_last_tactic());
  CHECK(check_proof(r.proof).ok);
  REQUIRE_FALSE(r.trace.empty());
  const Formula& first = resolve(r.proof->hypersequent, r.trace[0].occurrence);
  CHECK(first.kind() == Formula::Kind::Implies);
}

TEST_CASE("reordering random proofs under registry tactics") {
  std::size_t n = 0;
  for (const auto& p : random_proofs(83, 30)) {
    for (const auto& t : fair_tactics_registry()) {
      ReorderResult r = reorder_by_tactic(p, t);
      CHECK(check_proof(r.proof).ok);
      CHECK(identical(r.proof->hypersequent, p.root->hypersequent));
      ConformanceReport c = conforms_to_tactic(r.proof, t, axiom_closed());
      CHECK(c.conforms);
      CHECK(c.trace == r.trace);
      for (std::size_t i = 1; i < r.stage_heights.size(); ++i) CHECK(r.stage_heights[i] < r.stage_heights[i - 1]);
      ++n;
    }
  }
  CHECK(n == 60);
}

// ------------------------------------------------------ height contracts

TEST_CASE("height contracts on random proofs") {
  testgen::Gen g(84);
  for (const auto& p : random_proofs(85, 40)) {
    const Hypersequent& root = p.root->hypersequent;
    ProofTree w = weaken(p, parse_sequent(testgen::random_qf_text(g, 1) + " => p1"));
    CHECK(height(w) == height(p));
    std::size_t c = g.below(root.components.size());
    SplitSpec spec{c, {}, {}};
    for (std::size_t m = 0; m < root.components[c].antecedent.size(); ++m) {
      if (g.coin()) spec.second_antecedent.insert(m);
    }
    for (std::size_t m = 0; m < root.components[c].succedent.size(); ++m) {
      if (g.coin()) spec.second_succedent.insert(m);
    }
    ProofTree s = split(p, spec);
    CHECK(height(s) == height(p));
    ProofTree a = add_atom(p, c, g.coin() ? Atom::predicate("A") : Atom::semiprop("q1", SemiPropSort::Type0));
    CHECK(height(a) == height(p));
    for (const auto& occ : compound_occurrences(root)) {
      RuleId rule = *rule_for(resolve(root, occ), occ.side);
      InvertOptions opts;
      if (needs_term(rule)) opts.term = Term::apply("c");
      auto outs = invert(p, rule, occ, opts);
      auto expected = rule_premises(root, make_application(root, occ, opts.term));
      REQUIRE(outs.size() == expected.size());
      for (std::size_t i = 0; i < outs.size(); ++i) {
        CHECK(check_proof(outs[i]).ok);
        CHECK(height(outs[i]) <= height(p));
        CHECK(outs[i].root->hypersequent == expected[i].hypersequent);
      }
    }
    ProofTree dup = weaken(p, root.components[c]);
    ProofTree k = contract(dup);
    CHECK(height(k) <= height(dup));
    CHECK(canonical(k.root->hypersequent) == canonical(root));
  }
}

// --------------------------------------------------------------- DAG

TEST_CASE("quantifier DAG of the worked chain") {
  Hypersequent h = H(
      "=> q1 | q1 => q3 | q3 => q4 | q4 => q5 | q5 => B(t3, a2, t5) | q4 => B(t3, a2, t4) | q1 => q2 | q2 => B(t1, a1, t2)");
  QuantifierDag dag = build_quantifier_dag(h);
  CHECK(dag.vertices.size() == 8);
  CHECK(dag.edges.size() == 7);
  CHECK(to_string(dag.vertices[dag.source]) == "q1");
  CHECK(dag.sinks.size() == 3);
  for (std::size_t s : dag.sinks) CHECK(dag.vertices[s].kind() == Formula::Kind::Atomic);
  CHECK(dag.source_component);
  CHECK(dag_chain_feasible(dag));
  CHECK_FALSE(is_axiom(h).axiom);
}

TEST_CASE("quantifier DAG of a short path and of a cycle") {
  QuantifierDag path = build_quantifier_dag(H("=> q1 | q1 => P(c)"));
  CHECK(path.vertices.size() == 2);
  CHECK(path.edges.size() == 1);
  CHECK(path.sinks.size() == 1);
  CHECK_THROWS_AS(build_quantifier_dag(H("q1 => q2 | q2 => q1")), TransformError);
  CHECK_THROWS_AS(build_quantifier_dag(H("A, B => q1")), TransformError);
  CHECK_THROWS_AS(build_quantifier_dag(H("=> q1 | q1 => A | q2 => B")), TransformError);
  CHECK_THROWS_AS(build_quantifier_dag(H("=> q1 | A => q1")), TransformError);
}

TEST_CASE("strict chain feasibility matches axiomhood") {
  CHECK_FALSE(dag_chain_feasible(build_quantifier_dag(H("=> q1 | q1 => 1"))));
  CHECK(is_axiom(H("=> q1 | q1 => 1")).axiom);
  CHECK(dag_chain_feasible(build_quantifier_dag(H("=> q1 | q1 => 1/2"))));
  CHECK_FALSE(is_axiom(H("=> q1 | q1 => 1/2")).axiom);
  CHECK(quantifier_free_part(H("=> q1 | q1 => exists x. P(x) | q1 => P(c)")) == H("=> q1 | q1 => P(c)"));
}
