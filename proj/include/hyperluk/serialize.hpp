#pragma once

#include <string>

#include <json.hpp>

#include "hyperluk/calculus.hpp"
#include "hyperluk/search.hpp"
#include "hyperluk/semantics.hpp"

namespace hyperluk {

using Json = nlohmann::json;

Json to_json(const Hypersequent& h);
Json to_json(const OccurrenceRef& occ);
OccurrenceRef occurrence_from_json(const Json& j);

// {format, version, signature, status, root}; nodes carry the hypersequent
// as text and as structured components.
Json proof_to_json(const ProofTree& tree);
// Rebuilds the tree without validation; run check_proof or certify next.
ProofTree proof_from_json(const Json& j);

std::string proof_to_text(const ProofTree& tree);
// bussproofs markup.
std::string proof_to_latex(const ProofTree& tree);

// Rationals as "n/d" strings.
Json model_to_json(const Countermodel& cm);
Countermodel model_from_json(const Json& j);

Json stats_to_json(const SearchStats& s);

// "0:a:1" or "0:s:1".
OccurrenceRef parse_occurrence(const std::string& text);

}  // namespace hyperluk
