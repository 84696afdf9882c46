#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperluk/calculus.hpp"

namespace hyperluk {

// A thread follows one formula occurrence upward through the copies the
// rules make of it; a principal occurrence ends its thread and its
// subformula occurrences start new ones.
struct MemberThread {
  std::size_t id = 0;
  std::size_t birth_depth = 0;
};

struct NodeThreads {
  std::size_t depth = 0;
  std::vector<std::array<std::vector<MemberThread>, 2>> members;
};

std::map<NodePath, NodeThreads> annotate_threads(const NodePtr& root);

struct LeafChoice {
  NodePath leaf;
  OccurrenceRef occurrence;

  friend bool operator==(const LeafChoice&, const LeafChoice&) = default;
};

using ClosedLeaf = std::function<bool(const Hypersequent&)>;

enum class FairnessClass { RoundRobinQueue, LeftmostLowestAging, PriorityAging, None };

struct Tactic {
  std::string name;
  FairnessClass fairness = FairnessClass::None;
  std::function<std::optional<LeafChoice>(const NodePtr&, const ClosedLeaf&)> select;
};

// Round-robin: among the open leaves of least depth (leftmost first), pick
// the occurrence whose thread is oldest. Every thread alive at some point
// is older than all threads created later, so it is served after finitely
// many steps on each branch.
Tactic round_robin_tactic();

// Leftmost non-atomic occurrence of the lowest leftmost open leaf, except
// that an occurrence that has waited `age_limit` levels is served first.
Tactic leftmost_aging_tactic(std::size_t age_limit = 4);

// Prefer propositional (or quantifier) occurrences, with the same aging
// escape.
Tactic quantifier_last_tactic(std::size_t age_limit = 6);
Tactic quantifier_first_tactic(std::size_t age_limit = 6);

// Always the leftmost occurrence, never aged. Not fair.
Tactic leftmost_unfair_tactic();

std::vector<Tactic> fair_tactics_registry();
// Registry tactics plus the priority variants.
std::vector<Tactic> all_fair_tactics();
std::optional<Tactic> find_tactic(const std::string& name);

// Replays the construction order of a proof against a tactic: at each step
// the tactic's choice must be the next expanded leaf occurrence.
struct ConformanceReport {
  bool conforms = true;
  std::size_t steps = 0;
  std::string message;
  std::vector<LeafChoice> trace;
};

ConformanceReport conforms_to_tactic(const NodePtr& proof, const Tactic& tactic, const ClosedLeaf& closed);

}  // namespace hyperluk
