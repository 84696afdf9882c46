#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperluk/calculus.hpp"
#include "hyperluk/linear.hpp"
#include "hyperluk/semantics.hpp"
#include "hyperluk/tactic.hpp"

namespace hyperluk {

// Ground terms over the constants, parameters and function symbols of the
// branch, enumerated by depth and then lexicographically.
struct TermPolicy {
  std::size_t max_depth = 2;
};

struct SearchBudget {
  std::size_t max_backward_applications = 200000;
  std::size_t max_term_depth = 2;
  std::size_t axiom_check_every = 1;
  std::optional<std::chrono::milliseconds> time_limit;
  // Upper limit of the deepening bound on term-rule applications per branch.
  std::size_t max_instances = 12;
};

struct SearchStats {
  std::size_t applications = 0;
  std::size_t leaves = 0;
  std::size_t lp_calls = 0;
  std::size_t max_depth = 0;
  std::size_t levels = 0;
  double seconds = 0;
};

enum class SearchStatus { Proved, Exhausted, NotValid };
std::string_view status_name(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<ProofTree> proof;
  std::optional<Countermodel> witness;
  SearchStats stats;
};

std::vector<Term> candidate_terms(const Hypersequent& h, const Signature& sig, std::size_t max_depth);

// Backward search following the tactic; terms for AllLeft/ExRight branch
// disjunctively. Deterministic.
SearchOutcome prove(const Hypersequent& h, const Tactic& tactic, const TermPolicy& policy = {},
                    const SearchBudget& budget = {}, const Signature& sig = {});

struct Decision {
  bool valid = false;
  std::optional<ProofTree> proof;
  // Atom values refuting a failed leaf and, through it, the root.
  std::optional<Assignment> atom_witness;
  std::optional<Countermodel> witness;
  std::size_t applications = 0;
};

// Complete for quantifier-free hypersequents.
Decision decide_quantifier_free(const Hypersequent& h);

}  // namespace hyperluk
