#include "hyperluk/linear.hpp"

#include <set>
#include <stdexcept>

#include "hyperluk/error.hpp"

namespace hyperluk {

void LinearSystem::validate() const {
  std::set<std::string> ids;
  for (const auto& v : variables) {
    if (!ids.insert(v.id).second) throw Error("duplicate variable " + v.id);
  }
  for (const auto& c : constraints) {
    for (const auto& [id, coeff] : c.coefficients) {
      if (!ids.count(id)) throw Error("constraint mentions undeclared variable " + id);
    }
  }
}

bool satisfies(const LinearSystem& sys, const Assignment& a) {
  for (const auto& v : sys.variables) {
    auto it = a.find(v.id);
    if (it == a.end()) return false;
    if (v.lower && it->second < *v.lower) return false;
    if (v.upper && it->second > *v.upper) return false;
  }
  for (const auto& c : sys.constraints) {
    Rational lhs = c.constant;
    for (const auto& [id, coeff] : c.coefficients) {
      auto it = a.find(id);
      if (it == a.end()) return false;
      lhs += coeff * it->second;
    }
    if (c.relation == Relation::Less ? !(lhs < Rational(0)) : !(lhs <= Rational(0))) return false;
  }
  return true;
}

std::string to_string(const LinearSystem& sys) {
  std::string out;
  for (const auto& v : sys.variables) {
    out += v.id + " in " + (v.lower ? "[" + v.lower->to_string() : std::string("(-inf")) + ", " +
           (v.upper ? v.upper->to_string() + "]" : std::string("+inf)")) + "\n";
  }
  for (const auto& c : sys.constraints) {
    std::string row;
    for (const auto& [id, coeff] : c.coefficients) {
      if (!row.empty()) row += " + ";
      row += coeff.to_string() + "*" + id;
    }
    if (!row.empty()) row += " + ";
    row += c.constant.to_string();
    out += row + (c.relation == Relation::Less ? " < 0\n" : " <= 0\n");
  }
  return out;
}

FeasibilityResult FeasibilityResult::feasible(const LinearSystem& sys, Assignment witness) {
  if (!satisfies(sys, witness)) throw std::logic_error("feasibility witness does not satisfy the system");
  FeasibilityResult r;
  r.witness_ = std::move(witness);
  return r;
}

FeasibilityResult FeasibilityResult::infeasible() { return FeasibilityResult(); }

const Assignment& FeasibilityResult::witness() const {
  if (!witness_) throw std::logic_error("infeasible result has no witness");
  return *witness_;
}

// -------------------------------------------------------------- axiom check

LinearSystem falsification_system(const Hypersequent& h) {
  LinearSystem sys;
  std::set<std::string> declared;
  auto declare = [&](const Atom& a) {
    std::string id = to_string(a);
    if (!declared.insert(id).second) return id;
    LinearVariable v{id, std::nullopt, std::nullopt};
    if (a.kind == Atom::Kind::Predicate) {
      v.lower = Rational(0);
      v.upper = Rational(1);
    } else if (a.sort == SemiPropSort::Type1) {
      v.upper = Rational(1);
    } else {
      v.lower = Rational(0);
    }
    sys.variables.push_back(std::move(v));
    return id;
  };
  for (const auto& s : h.components) {
    if (!s.is_atomic()) continue;
    LinearConstraint c;
    c.relation = Relation::Less;
    auto add = [&](const Formula& f, const Rational& sign) {
      const Atom& a = f.atom();
      if (a.kind == Atom::Kind::Constant) {
        c.constant += sign * (a.value - Rational(1));
        return;
      }
      std::string id = declare(a);
      c.coefficients[id] += sign;
      c.constant -= sign;
    };
    for (const auto& f : s.succedent) add(f, Rational(1));
    for (const auto& f : s.antecedent) add(f, Rational(-1));
    for (auto it = c.coefficients.begin(); it != c.coefficients.end();) {
      it = it->second == Rational(0) ? c.coefficients.erase(it) : std::next(it);
    }
    sys.constraints.push_back(std::move(c));
  }
  return sys;
}

AxiomCheck is_axiom(const Hypersequent& h) {
  FeasibilityResult r = lp_feasible_strict(falsification_system(h));
  AxiomCheck out;
  out.axiom = !r.is_feasible();
  if (r.is_feasible()) out.witness = r.witness();
  return out;
}

}  // namespace hyperluk
