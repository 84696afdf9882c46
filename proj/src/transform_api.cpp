#include "hyperluk/error.hpp"
#include "hyperluk/transform.hpp"

namespace hyperluk {

namespace {

NodePtr prepare(const ProofTree& proof) {
  CheckReport r = check_proof(proof.root);
  if (!r.ok) throw TransformError("input is not a proof: " + r.message);
  return canonicalize(proof.root);
}

ProofTree audited(const NodePtr& out, const Hypersequent& expected_root) {
  if (!(out->hypersequent == expected_root)) throw std::logic_error("transformation produced the wrong root");
  CheckReport r = check_proof(out);
  if (!r.ok) throw std::logic_error("transformation produced an invalid proof: " + r.message);
  return ProofTree{out, TreeStatus::CheckedProof};
}

}  // namespace

ProofTree weaken(const ProofTree& proof, const Sequent& s) {
  NodePtr out = weaken(prepare(proof), s);
  return audited(out, concat(proof.root->hypersequent, Hypersequent{{s}}));
}

ProofTree split(const ProofTree& proof, const SplitSpec& spec) {
  NodePtr out = split(prepare(proof), spec);
  return audited(out, out->hypersequent);
}

ProofTree add_atom(const ProofTree& proof, std::size_t component, const Atom& atom) {
  NodePtr out = add_atom(prepare(proof), component, atom);
  return audited(out, out->hypersequent);
}

std::vector<ProofTree> invert(const ProofTree& proof, RuleId rule, const OccurrenceRef& occ,
                              const InvertOptions& options) {
  const Formula& f = resolve(proof.root->hypersequent, occ);
  if (rule_for(f, occ.side) != rule) {
    throw TransformError(std::string("invert: ") + std::string(rule_name(rule)) + " does not match " + to_string(f));
  }
  std::vector<ProofTree> out;
  for (const auto& d : invert(prepare(proof), occ, options)) out.push_back(audited(d, d->hypersequent));
  return out;
}

ProofTree contract(const ProofTree& proof) {
  NodePtr out = contract(prepare(proof));
  return audited(out, out->hypersequent);
}

ProofTree permute(const ProofTree& proof, const NodePath& at, PermutationCase c) {
  NodePtr out = permute(prepare(proof), at, c);
  return audited(out, proof.root->hypersequent);
}

ProofTree to_mid_hypersequent(const ProofTree& proof) {
  NodePtr out = to_mid_hypersequent(prepare(proof));
  return audited(out, proof.root->hypersequent);
}

ReorderResult reorder_by_tactic(const ProofTree& proof, const Tactic& tactic, std::size_t max_steps) {
  ReorderResult r = reorder_by_tactic(prepare(proof), tactic, max_steps);
  audited(r.proof, proof.root->hypersequent);
  return r;
}

}  // namespace hyperluk
