#include "hyperluk/tactic.hpp"

#include <algorithm>

namespace hyperluk {

namespace {

int side_index(Side s) { return s == Side::Antecedent ? 0 : 1; }

NodeThreads fresh_threads(const Hypersequent& h, std::size_t depth, std::size_t& next) {
  NodeThreads t;
  t.depth = depth;
  for (const auto& s : h.components) {
    std::array<std::vector<MemberThread>, 2> comp;
    for (int k = 0; k < 2; ++k) {
      for (std::size_t m = 0; m < s.side(k == 0 ? Side::Antecedent : Side::Succedent).size(); ++m) {
        comp[k].push_back({next++, depth});
      }
    }
    t.members.push_back(std::move(comp));
  }
  return t;
}

void annotate_rec(const NodePtr& node, NodePath& path, const NodeThreads& here, std::size_t& next,
                  std::map<NodePath, NodeThreads>& out) {
  out[path] = here;
  if (node->is_leaf()) return;
  for (std::size_t i = 0; i < node->children.size(); ++i) {
    const NodePtr& child = node->children[i];
    NodeThreads t;
    t.depth = here.depth + 1;
    if (node->ancestry.size() == node->children.size()) {
      const PremiseAncestry& anc = node->ancestry[i];
      for (const auto& comp : anc.components) {
        std::array<std::vector<MemberThread>, 2> threads;
        for (int k = 0; k < 2; ++k) {
          for (const auto& origin : comp.members[k]) {
            if (origin.from_principal) {
              threads[k].push_back({next++, t.depth});
            } else {
              const auto& src = origin.source;
              threads[k].push_back(here.members[src.component][side_index(src.side)][src.member]);
            }
          }
        }
        t.members.push_back(std::move(threads));
      }
    } else {
      t = fresh_threads(child->hypersequent, t.depth, next);
    }
    path.push_back(i);
    annotate_rec(child, path, t, next, out);
    path.pop_back();
  }
}

struct Candidate {
  OccurrenceRef occ;
  MemberThread thread;
  bool quantifier;
};

using MemberPolicy = std::function<std::size_t(const std::vector<Candidate>&, std::size_t leaf_depth)>;

Tactic make_tactic(std::string name, FairnessClass fairness, MemberPolicy policy) {
  Tactic t;
  t.name = std::move(name);
  t.fairness = fairness;
  t.select = [policy](const NodePtr& root, const ClosedLeaf& closed) -> std::optional<LeafChoice> {
    std::vector<LeafInfo> ls = leaves(root);
    const LeafInfo* best = nullptr;
    std::vector<Candidate> best_candidates;
    std::map<NodePath, NodeThreads> threads;
    bool annotated = false;
    for (const auto& leaf : ls) {
      if (best && leaf.path.size() >= best->path.size()) continue;
      const Hypersequent& h = leaf.node->hypersequent;
      std::vector<Candidate> cs;
      for (std::size_t c = 0; c < h.components.size(); ++c) {
        for (Side side : {Side::Antecedent, Side::Succedent}) {
          const auto& fs = h.components[c].side(side);
          for (std::size_t m = 0; m < fs.size(); ++m) {
            if (is_non_atomic_rpl(fs[m])) cs.push_back({OccurrenceRef{c, side, m}, {}, fs[m].is_quantifier()});
          }
        }
      }
      if (cs.empty() || closed(h)) continue;
      best = &leaf;
      best_candidates = std::move(cs);
    }
    if (!best) return std::nullopt;
    if (!annotated) {
      threads = annotate_threads(root);
      annotated = true;
    }
    const NodeThreads& nt = threads.at(best->path);
    for (auto& c : best_candidates) c.thread = nt.members[c.occ.component][side_index(c.occ.side)][c.occ.member];
    std::size_t pick = policy(best_candidates, best->path.size());
    return LeafChoice{best->path, best_candidates[pick].occ};
  };
  return t;
}

std::size_t oldest(const std::vector<Candidate>& cs, const std::function<bool(const Candidate&)>& keep) {
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (keep(cs[i]) && (!pick || cs[i].thread.id < cs[*pick].thread.id)) pick = i;
  }
  return pick ? *pick : cs.size();
}

MemberPolicy aging(std::size_t limit, std::function<bool(const Candidate&)> preferred) {
  return [limit, preferred](const std::vector<Candidate>& cs, std::size_t depth) {
    std::size_t aged = oldest(cs, [&](const Candidate& c) { return depth - c.thread.birth_depth >= limit; });
    if (aged < cs.size()) return aged;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (preferred(cs[i])) return i;
    }
    return std::size_t{0};
  };
}

}  // namespace

std::map<NodePath, NodeThreads> annotate_threads(const NodePtr& root) {
  std::map<NodePath, NodeThreads> out;
  std::size_t next = 0;
  NodeThreads top = fresh_threads(root->hypersequent, 0, next);
  NodePath path;
  annotate_rec(root, path, top, next, out);
  return out;
}

Tactic round_robin_tactic() {
  return make_tactic("round-robin", FairnessClass::RoundRobinQueue, [](const std::vector<Candidate>& cs, std::size_t) {
    return oldest(cs, [](const Candidate&) { return true; });
  });
}

Tactic leftmost_aging_tactic(std::size_t age_limit) {
  return make_tactic("leftmost-aging", FairnessClass::LeftmostLowestAging,
                     aging(age_limit, [](const Candidate&) { return true; }));
}

Tactic quantifier_last_tactic(std::size_t age_limit) {
  return make_tactic("quantifier-last", FairnessClass::PriorityAging,
                     aging(age_limit, [](const Candidate& c) { return !c.quantifier; }));
}

Tactic quantifier_first_tactic(std::size_t age_limit) {
  return make_tactic("quantifier-first", FairnessClass::PriorityAging,
                     aging(age_limit, [](const Candidate& c) { return c.quantifier; }));
}

Tactic leftmost_unfair_tactic() {
  return make_tactic("leftmost-unfair", FairnessClass::None,
                     [](const std::vector<Candidate>&, std::size_t) { return std::size_t{0}; });
}

std::vector<Tactic> fair_tactics_registry() { return {round_robin_tactic(), leftmost_aging_tactic()}; }

std::vector<Tactic> all_fair_tactics() {
  return {round_robin_tactic(), leftmost_aging_tactic(), quantifier_last_tactic(), quantifier_first_tactic()};
}

std::optional<Tactic> find_tactic(const std::string& name) {
  for (auto& t : all_fair_tactics()) {
    if (t.name == name) return t;
  }
  if (name == "leftmost-unfair") return leftmost_unfair_tactic();
  return std::nullopt;
}

ConformanceReport conforms_to_tactic(const NodePtr& proof, const Tactic& tactic, const ClosedLeaf& closed) {
  ConformanceReport report;
  NodePtr tree = make_leaf(proof->hypersequent);
  auto has_open = [&](const NodePtr& t) {
    for (const auto& l : leaves(t)) {
      if (!closed(l.node->hypersequent)) return true;
    }
    return false;
  };
  while (has_open(tree)) {
    auto choice = tactic.select(tree, closed);
    if (!choice) {
      report.conforms = false;
      report.message = "open leaf without logical symbols";
      return report;
    }
    const ProofNode& target = node_at(proof, choice->leaf);
    if (target.is_leaf()) {
      report.conforms = false;
      report.message = "tactic expands a leaf of the proof";
      return report;
    }
    if (!(target.application->principal == choice->occurrence)) {
      report.conforms = false;
      report.message = "step " + std::to_string(report.steps) + ": tactic chose " + to_string(choice->occurrence) +
                       ", proof expands " + to_string(target.application->principal);
      return report;
    }
    std::vector<NodePtr> kids;
    for (const auto& c : target.children) kids.push_back(make_leaf(c->hypersequent));
    tree = replace_at(tree, choice->leaf, make_node(target.hypersequent, *target.application, std::move(kids)));
    report.trace.push_back(*choice);
    ++report.steps;
  }
  for (const auto& l : leaves(tree)) {
    if (!node_at(proof, l.path).is_leaf()) {
      report.conforms = false;
      report.message = "proof continues above an axiom";
      return report;
    }
  }
  return report;
}

}  // namespace hyperluk
