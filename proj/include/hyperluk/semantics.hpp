#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperluk/rational.hpp"
#include "hyperluk/syntax.hpp"

namespace hyperluk {

// Finite hs-interpretation over the domain {0, ..., domain_size - 1}.
// Tables are flattened row-major over domain^arity.
struct HsInterpretation {
  std::size_t domain_size = 1;
  std::map<std::string, std::vector<std::size_t>> functions;
  std::map<std::string, std::vector<Rational>> predicates;
  std::map<std::string, Rational> semiprops;
};

using Valuation = std::map<std::string, std::size_t>;

struct Countermodel {
  HsInterpretation model;
  Valuation valuation;
};

std::size_t eval_term(const Term& t, const HsInterpretation& m, const Valuation& v);
Rational eval_formula(const Formula& f, const HsInterpretation& m, const Valuation& v);
Rational sequent_value(const Sequent& s, const HsInterpretation& m, const Valuation& v);
bool sequent_true(const Sequent& s, const HsInterpretation& m, const Valuation& v);
bool hypersequent_true(const Hypersequent& h, const HsInterpretation& m, const Valuation& v);

// Checks sort ranges of semiprop values and value ranges of predicate tables.
void validate(const HsInterpretation& m);

struct Vocabulary {
  std::map<std::string, std::size_t> functions;
  std::map<std::string, std::size_t> predicates;
  std::map<std::string, SemiPropSort> semiprops;
  std::set<std::string> free_variables;
};

Vocabulary vocabulary(const Hypersequent& h);

struct SamplingOptions {
  std::uint64_t seed = 20240917;
  std::size_t samples = 1000;
  std::size_t max_domain = 3;
  long grid_denominator = 20;
};

Countermodel random_interpretation(const Vocabulary& voc, std::size_t domain_size, long grid, std::mt19937_64& rng);

std::optional<Countermodel> random_countermodel_search(const Hypersequent& h, const SamplingOptions& options);

// Free term model realizing an assignment to the distinct atoms of h
// (keys as produced by to_string(Atom)); unassigned atoms get 0.
Countermodel interpretation_from_witness(const Hypersequent& h, const std::map<std::string, Rational>& witness);

}  // namespace hyperluk
