#include "hyperluk/search.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hyperluk/error.hpp"

namespace hyperluk {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Proved:
      return "Proved";
    case SearchStatus::Exhausted:
      return "Exhausted";
    case SearchStatus::NotValid:
      return "NotValid";
  }
  return "?";
}

std::vector<Term> candidate_terms(const Hypersequent& h, const Signature& sig, std::size_t max_depth) {
  std::map<std::string, std::size_t> functions = sig.functions;
  for (const auto& [name, arity] : vocabulary(h).functions) functions.emplace(name, arity);
  std::vector<std::vector<Term>> by_depth(max_depth + 1);
  for (const auto& [name, arity] : functions) {
    if (arity == 0) by_depth[0].push_back(Term::apply(name));
  }
  if (by_depth[0].empty()) by_depth[0].push_back(Term::apply(sig.default_constant()));
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<Term> lower;
    for (std::size_t e = 0; e < d; ++e) lower.insert(lower.end(), by_depth[e].begin(), by_depth[e].end());
    for (const auto& [name, arity] : functions) {
      if (arity == 0) continue;
      // All argument tuples over lower terms with at least one of depth d-1.
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        std::vector<Term> args;
        bool deep = false;
        for (std::size_t i : idx) {
          args.push_back(lower[i]);
          deep = deep || lower[i].depth() == d - 1;
        }
        if (deep) by_depth[d].push_back(Term::apply(name, args));
        std::size_t k = 0;
        while (k < arity && ++idx[k] == lower.size()) idx[k++] = 0;
        if (k == arity) break;
      }
    }
    std::sort(by_depth[d].begin(), by_depth[d].end());
  }
  std::vector<Term> out;
  for (auto& level : by_depth) out.insert(out.end(), level.begin(), level.end());
  return out;
}

namespace {

struct Abort {};

class Searcher {
 public:
  Searcher(const Tactic& tactic, const SearchBudget& budget, const Signature& sig)
      : tactic_(tactic), budget_(budget), sig_(sig), start_(std::chrono::steady_clock::now()) {}

  bool closed(const Hypersequent& h) {
    std::string key = to_string(canonical(h));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ++stats.lp_calls;
    bool axiom = is_axiom(h).axiom;
    cache_.emplace(std::move(key), axiom);
    return axiom;
  }

  // Depth-first over term choices; true when every leaf is an axiom.
  std::optional<NodePtr> run(const NodePtr& tree, std::size_t instance_limit, std::size_t term_depth) {
    limit_ = instance_limit;
    term_depth_ = term_depth;
    pruned = false;
    return step(tree, {});
  }

  SearchStats stats;
  bool pruned = false;

 private:
  std::optional<NodePtr> step(const NodePtr& tree, std::map<NodePath, std::size_t> instances) {
    ClosedLeaf closed_fn = [this](const Hypersequent& h) { return closed(h); };
    auto choice = tactic_.select(tree, closed_fn);
    if (!choice) {
      for (const auto& l : leaves(tree)) {
        if (!closed(l.node->hypersequent)) return std::nullopt;
      }
      return tree;
    }
    charge();
    const Hypersequent& h = node_at(tree, choice->leaf).hypersequent;
    const Formula& f = resolve(h, choice->occurrence);
    RuleId rule = *rule_for(f, choice->occurrence.side);
    std::size_t used = instances[choice->leaf];
    std::vector<std::optional<Term>> terms;
    if (needs_term(rule)) {
      if (used >= limit_) {
        pruned = true;
        return std::nullopt;
      }
      for (auto& t : candidate_terms(h, sig_, term_depth_)) terms.emplace_back(std::move(t));
      ++used;
    } else {
      terms.emplace_back(std::nullopt);
    }
    for (const auto& t : terms) {
      ProofTree next = backward_apply(ProofTree{tree, TreeStatus::SearchTree}, choice->leaf, choice->occurrence, t);
      const ProofNode& expanded = node_at(next.root, choice->leaf);
      bool dead = false;
      std::map<NodePath, std::size_t> inst = instances;
      inst.erase(choice->leaf);
      for (std::size_t i = 0; i < expanded.children.size(); ++i) {
        NodePath child = choice->leaf;
        child.push_back(i);
        inst[child] = used;
        stats.max_depth = std::max(stats.max_depth, child.size());
        const Hypersequent& ch = expanded.children[i]->hypersequent;
        if (!closed(ch) && !has_candidate(ch)) dead = true;
      }
      if (dead) continue;
      if (auto done = step(next.root, std::move(inst))) return done;
    }
    return std::nullopt;
  }

  static bool has_candidate(const Hypersequent& h) {
    for (const auto& s : h.components) {
      for (Side side : {Side::Antecedent, Side::Succedent}) {
        for (const auto& f : s.side(side)) {
          if (is_non_atomic_rpl(f)) return true;
        }
      }
    }
    return false;
  }

  void charge() {
    if (++stats.applications > budget_.max_backward_applications) throw Abort{};
    if (budget_.time_limit && std::chrono::steady_clock::now() - start_ > *budget_.time_limit) throw Abort{};
  }

  const Tactic& tactic_;
  const SearchBudget& budget_;
  const Signature& sig_;
  std::chrono::steady_clock::time_point start_;
  std::unordered_map<std::string, bool> cache_;
  std::size_t limit_ = 0;
  std::size_t term_depth_ = 0;
};

}  // namespace

SearchOutcome prove(const Hypersequent& h, const Tactic& tactic, const TermPolicy& policy, const SearchBudget& budget,
                    const Signature& sig) {
  auto start = std::chrono::steady_clock::now();
  Searcher searcher(tactic, budget, sig);
  SearchOutcome out;
  const std::size_t max_term_depth = std::min(policy.max_depth, budget.max_term_depth);
  try {
    NodePtr root = make_leaf(h);
    bool dead_root = !searcher.closed(h);
    if (dead_root) {
      dead_root = true;
      for (const auto& s : h.components) {
        for (Side side : {Side::Antecedent, Side::Succedent}) {
          for (const auto& f : s.side(side)) dead_root = dead_root && !is_non_atomic_rpl(f);
        }
      }
    }
    if (!dead_root) {
      for (std::size_t level = 1; level <= budget.max_instances; ++level) {
        ++searcher.stats.levels;
        std::size_t depth = std::min(max_term_depth, (level - 1) / 2);
        if (auto found = searcher.run(root, level, depth)) {
          out.status = SearchStatus::Proved;
          out.proof = certify(*found);
          break;
        }
        if (!searcher.pruned && depth == max_term_depth) break;
      }
    }
  } catch (const Abort&) {
    out.status = SearchStatus::Exhausted;
  }
  out.stats = searcher.stats;
  if (out.proof) out.stats.leaves = leaves(out.proof->root).size();
  out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace hyperluk
