#include "hyperluk/error.hpp"
#include "hyperluk/search.hpp"

namespace hyperluk {

namespace {

std::optional<OccurrenceRef> first_compound(const Hypersequent& h) {
  for (std::size_t c = 0; c < h.components.size(); ++c) {
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      const auto& fs = h.components[c].side(side);
      for (std::size_t m = 0; m < fs.size(); ++m) {
        if (!fs[m].is_atomic()) return OccurrenceRef{c, side, m};
      }
    }
  }
  return std::nullopt;
}

NodePtr decide_rec(const Hypersequent& h, Decision& d) {
  AxiomCheck check = is_axiom(h);
  if (check.axiom) return make_leaf(h);
  auto occ = first_compound(h);
  if (!occ) {
    d.atom_witness = check.witness;
    return nullptr;
  }
  RuleApplication app = make_application(h, *occ);
  ++d.applications;
  std::vector<NodePtr> children;
  for (auto& p : rule_premises(h, app)) {
    NodePtr c = decide_rec(p.hypersequent, d);
    if (!c) return nullptr;
    children.push_back(std::move(c));
  }
  return make_node(h, std::move(app), std::move(children));
}

}  // namespace

Decision decide_quantifier_free(const Hypersequent& h) {
  for (const auto& s : h.components) {
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      for (const auto& f : s.side(side)) {
        if (!is_quantifier_free(f)) throw RuleError("decide_quantifier_free: " + to_string(f) + " has a quantifier");
        if (!f.is_atomic() && !is_rpl(f)) {
          throw RuleError("decide_quantifier_free: " + to_string(f) + " mixes semipropositional variables");
        }
      }
    }
  }
  Decision d;
  NodePtr root = decide_rec(h, d);
  if (root) {
    d.valid = true;
    d.proof = ProofTree{root, TreeStatus::CheckedProof};
    return d;
  }
  d.witness = interpretation_from_witness(h, *d.atom_witness);
  for (const auto& s : h.components) {
    if (sequent_true(s, d.witness->model, d.witness->valuation)) {
      throw std::logic_error("refuting witness does not transport to the root");
    }
  }
  return d;
}

}  // namespace hyperluk
