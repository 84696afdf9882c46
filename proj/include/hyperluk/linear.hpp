#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperluk/rational.hpp"
#include "hyperluk/syntax.hpp"

namespace hyperluk {

enum class Relation { Less, LessEqual };

struct LinearVariable {
  std::string id;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// sum(coefficients[v] * v) + constant  REL  0
struct LinearConstraint {
  std::map<std::string, Rational> coefficients;
  Rational constant;
  Relation relation = Relation::Less;
};

struct LinearSystem {
  std::vector<LinearVariable> variables;
  std::vector<LinearConstraint> constraints;

  // Throws when a constraint mentions an undeclared variable.
  void validate() const;
};

using Assignment = std::map<std::string, Rational>;

bool satisfies(const LinearSystem& sys, const Assignment& a);
std::string to_string(const LinearSystem& sys);

class FeasibilityResult {
 public:
  // Verifies the witness against the system; throws std::logic_error on failure.
  static FeasibilityResult feasible(const LinearSystem& sys, Assignment witness);
  static FeasibilityResult infeasible();

  bool is_feasible() const { return witness_.has_value(); }
  const Assignment& witness() const;

 private:
  std::optional<Assignment> witness_;
};

// Exact simplex with Bland's rule; strict rows are relaxed by a shared
// epsilon that is maximized up to 1.
FeasibilityResult lp_feasible_strict(const LinearSystem& sys);

// Fourier-Motzkin elimination with strictness flags.
FeasibilityResult fm_feasible_strict(const LinearSystem& sys, std::size_t max_variables = 12);

// ---------------------------------------------------------------- axioms

LinearSystem falsification_system(const Hypersequent& h);

struct AxiomCheck {
  bool axiom = false;
  std::optional<Assignment> witness;
};

AxiomCheck is_axiom(const Hypersequent& h);

}  // namespace hyperluk
