#include <doctest.h>

#include "generators.hpp"
#include "hyperluk/corpus.hpp"
#include "hyperluk/parser.hpp"
#include "hyperluk/search.hpp"
#include "hyperluk/tactic.hpp"

using namespace hyperluk;

namespace {

ClosedLeaf axiom_closed() {
  return [](const Hypersequent& h) { return is_axiom(h).axiom; };
}

ClosedLeaf never_closed() {
  return [](const Hypersequent&) { return false; };
}

// Follows the first child for `steps` applications; returns the formulas
// chosen, in order.
std::vector<Formula> run_branch(const Tactic& tactic, const std::string& text, std::size_t steps) {
  ProofTree tree{make_leaf(parse_hypersequent(text)), TreeStatus::SearchTree};
  std::vector<Formula> chosen;
  for (std::size_t i = 0; i < steps; ++i) {
    auto choice = tactic.select(tree.root, never_closed());
    if (!choice) break;
    const Hypersequent& h = node_at(tree.root, choice->leaf).hypersequent;
    const Formula& f = resolve(h, choice->occurrence);
    chosen.push_back(f);
    std::optional<Term> t;
    if (needs_term(*rule_for(f, choice->occurrence.side))) t = Term::apply("c");
    tree = backward_apply(tree, choice->leaf, choice->occurrence, t);
  }
  return chosen;
}

}  // namespace

TEST_CASE("registry ships two distinct fair tactics") {
  auto reg = fair_tactics_registry();
  REQUIRE(reg.size() >= 2);
  CHECK(reg[0].name != reg[1].name);
  std::set<FairnessClass> classes;
  for (const auto& t : reg) {
    CHECK(t.fairness != FairnessClass::None);
    CHECK(t.name != "leftmost-unfair");
    classes.insert(t.fairness);
  }
  CHECK(classes.count(FairnessClass::RoundRobinQueue));
  CHECK(classes.count(FairnessClass::LeftmostLowestAging));
  CHECK(leftmost_unfair_tactic().fairness == FairnessClass::None);
  CHECK(find_tactic("round-robin").has_value());
  CHECK(find_tactic("leftmost-aging").has_value());
  CHECK_FALSE(find_tactic("nonexistent").has_value());
}

TEST_CASE("tactics stop when no logical symbols remain") {
  for (const auto& t : all_fair_tactics()) {
    NodePtr leaf = make_leaf(parse_hypersequent("A => B | p1 => q1"));
    CHECK_FALSE(t.select(leaf, never_closed()).has_value());
    NodePtr semi = make_leaf(parse_hypersequent("p1 -> A => B"));
    CHECK_FALSE(t.select(semi, never_closed()).has_value());
  }
}

TEST_CASE("tactics skip closed leaves") {
  NodePtr leaf = make_leaf(parse_hypersequent("A -> B => | =>"));
  CHECK_FALSE(round_robin_tactic().select(leaf, axiom_closed()).has_value());
  CHECK(round_robin_tactic().select(leaf, never_closed()).has_value());
}

TEST_CASE("selected occurrences are non-atomic formulas without semipropositional variables") {
  testgen::Gen g(71);
  for (const auto& t : all_fair_tactics()) {
    for (int i = 0; i < 40; ++i) {
      Signature sig;
      std::string text = "=> " + testgen::random_theorem_text(g);
      ProofTree tree{make_leaf(parse_hypersequent(text, sig)), TreeStatus::SearchTree};
      for (int step = 0; step < 8; ++step) {
        auto choice = t.select(tree.root, axiom_closed());
        if (!choice) break;
        const ProofNode& leaf = node_at(tree.root, choice->leaf);
        CHECK(leaf.is_leaf());
        const Formula& f = resolve(leaf.hypersequent, choice->occurrence);
        CHECK(is_non_atomic_rpl(f));
        std::optional<Term> term;
        if (needs_term(*rule_for(f, choice->occurrence.side))) term = Term::apply("c");
        tree = backward_apply(tree, choice->leaf, choice->occurrence, term);
      }
    }
  }
}

TEST_CASE("persistent occurrences are eventually served") {
  const std::string text = "=> exists x. P(x) | forall y. Q(y) => | => A -> B";
  for (const auto& t : fair_tactics_registry()) {
    auto chosen = run_branch(t, text, 24);
    INFO(t.name);
    std::size_t imp = 0, ex = 0, all = 0;
    for (const auto& f : chosen) {
      imp += f.kind() == Formula::Kind::Implies;
      ex += f.kind() == Formula::Kind::Exists;
      all += f.kind() == Formula::Kind::Forall;
    }
    CHECK(imp >= 1);
    CHECK(ex >= 3);
    CHECK(all >= 3);
  }
}

TEST_CASE("thread annotation follows copies") {
  ProofTree tree{make_leaf(parse_hypersequent("=> A -> B | C -> D =>")), TreeStatus::SearchTree};
  tree = backward_apply(tree, {}, {0, Side::Succedent, 0});
  auto threads = annotate_threads(tree.root);
  const NodeThreads& root = threads.at({});
  const NodeThreads& left = threads.at({0});
  const NodeThreads& right = threads.at({1});
  std::size_t copied = root.members[1][0][0].id;
  CHECK(left.members[1][0][0].id == copied);
  CHECK(right.members[1][0][0].id == copied);
  CHECK(right.members[0][0][0].id != root.members[0][1][0].id);
  CHECK(right.members[0][0][0].birth_depth == 1);
}

TEST_CASE("search proofs conform to their tactic") {
  for (const auto& t : fair_tactics_registry()) {
    for (const auto& e : standard_corpus()) {
      if (!e.theorem) continue;
      Signature sig;
      Hypersequent h = parse_hypersequent(e.hypersequent, sig);
      SearchOutcome out = prove(h, t, {}, {}, sig);
      REQUIRE(out.proof.has_value());
      ConformanceReport r = conforms_to_tactic(out.proof->root, t, axiom_closed());
      INFO(t.name << " " << e.hypersequent << ": " << r.message);
      CHECK(r.conforms);
    }
  }
}
