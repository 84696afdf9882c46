#include <algorithm>
#include <functional>
#include <map>

#include "hyperluk/error.hpp"
#include "hyperluk/linear.hpp"
#include "hyperluk/transform.hpp"
#include "transform_internal.hpp"

namespace hyperluk {

namespace {

// Proper term for a fresh application: the term of an application in the
// part acting on an equal formula, else a closed term of h, else c0.
Term choose_term(const NodePtr& part, const Formula& f, const Hypersequent& h) {
  std::optional<Term> found;
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
    if (found || n->is_leaf()) return;
    const RuleApplication& a = *n->application;
    if (a.proper_term && resolve(n->hypersequent, a.principal) == f) {
      found = a.proper_term;
      return;
    }
    for (const auto& c : n->children) walk(c);
  };
  walk(part);
  if (found) return *found;
  std::set<Term> ts = closed_terms(h);
  if (!ts.empty()) return *ts.begin();
  return Term::apply(Signature{}.default_constant());
}

std::set<std::size_t> thread_ids(const NodeThreads& t) {
  std::set<std::size_t> out;
  for (const auto& comp : t.members) {
    for (const auto& side : comp) {
      for (const auto& m : side) out.insert(m.id);
    }
  }
  return out;
}

}  // namespace

ReorderResult reorder_by_tactic(const NodePtr& proof, const Tactic& tactic, std::size_t max_steps) {
  ClosedLeaf closed = [](const Hypersequent& h) { return is_axiom(h).axiom; };
  ReorderResult result;
  NodePtr tree = make_leaf(proof->hypersequent);
  std::map<NodePath, NodePtr> parts;
  parts[{}] = proof;

  auto max_part_height = [&]() {
    std::size_t m = 0;
    for (const auto& [path, part] : parts) m = std::max(m, height(part));
    return m;
  };
  auto open_leaf_paths = [&]() {
    std::vector<NodePath> out;
    for (const auto& l : leaves(tree)) {
      if (!closed(l.node->hypersequent)) out.push_back(l.path);
    }
    return out;
  };
  auto prune_closed = [&]() {
    for (auto it = parts.begin(); it != parts.end();) {
      if (closed(it->second->hypersequent)) {
        it = parts.erase(it);
      } else {
        ++it;
      }
    }
  };
  prune_closed();

  std::size_t previous_height = max_part_height();
  // A stage ends once no open leaf still carries a non-atomic occurrence
  // that was present in an open leaf at the start of the stage.
  std::vector<NodePath> stage_roots;
  auto begin_stage = [&]() { stage_roots = open_leaf_paths(); };
  auto stage_done = [&]() {
    auto threads = annotate_threads(tree);
    for (const auto& path : open_leaf_paths()) {
      std::set<std::size_t> here = thread_ids(threads.at(path));
      for (const auto& root : stage_roots) {
        if (path.size() < root.size() || !std::equal(root.begin(), root.end(), path.begin())) continue;
        const Hypersequent& h = node_at(tree, root).hypersequent;
        const NodeThreads& t = threads.at(root);
        for (std::size_t c = 0; c < h.components.size(); ++c) {
          for (int k = 0; k < 2; ++k) {
            const auto& fs = h.components[c].side(k == 0 ? Side::Antecedent : Side::Succedent);
            for (std::size_t m = 0; m < fs.size(); ++m) {
              if (is_non_atomic_rpl(fs[m]) && here.count(t.members[c][k][m].id)) return false;
            }
          }
        }
      }
    }
    return true;
  };
  begin_stage();

  std::size_t steps = 0;
  while (true) {
    auto choice = tactic.select(tree, closed);
    if (!choice) break;
    if (++steps > max_steps) throw TransformError("reorder_by_tactic: step limit reached");
    auto pit = parts.find(choice->leaf);
    if (pit == parts.end()) throw std::logic_error("open leaf without a part");
    NodePtr part = pit->second;
    parts.erase(pit);
    const Hypersequent& h = part->hypersequent;
    const OccurrenceRef& occ = choice->occurrence;

    RuleApplication app;
    std::vector<NodePtr> pieces;
    if (part->application && part->application->principal == occ) {
      app = *part->application;
      pieces = part->children;
    } else {
      const Formula& f = resolve(h, occ);
      std::optional<Term> term;
      if (needs_term(*rule_for(f, occ.side))) term = choose_term(part, f, h);
      app = make_application(h, occ, term);
      pieces = detail::invert_with(part, app);
    }
    std::vector<NodePtr> leaves_here;
    for (const auto& p : pieces) leaves_here.push_back(make_leaf(p->hypersequent));
    NodePtr expanded = make_node(h, app, std::move(leaves_here));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      NodePath child = choice->leaf;
      child.push_back(i);
      NodePtr aligned = align(pieces[i], expanded->children[i]->hypersequent);
      if (!closed(aligned->hypersequent)) parts[child] = aligned;
    }
    tree = replace_at(tree, choice->leaf, expanded);
    result.trace.push_back(*choice);

    if (stage_done()) {
      std::size_t h_now = max_part_height();
      if (!parts.empty() && h_now >= previous_height) {
        throw std::logic_error("reorder_by_tactic: stage did not lower the part height");
      }
      result.stage_heights.push_back(h_now);
      ++result.stages;
      previous_height = h_now;
      begin_stage();
    }
  }
  if (!parts.empty()) throw TransformError("reorder_by_tactic: tactic stopped with untransformed parts");
  result.proof = tree;
  return result;
}

}  // namespace hyperluk
