#pragma once

#include <set>
#include <string>
#include <vector>

#include "hyperluk/calculus.hpp"

namespace hyperluk::detail {

int side_index(Side s);

// Proofs of the canonical premises of `app` at the root of `proof`. The
// proper symbol of `app` must be fresh for the root.
std::vector<NodePtr> invert_with(const NodePtr& proof, const RuleApplication& app);

// Makes `name` absent from the whole tree by renaming it to a fresh symbol.
// Requires `name` not to occur in the root.
NodePtr evict_symbol(const NodePtr& proof, const std::string& name, const std::set<std::string>& avoid = {});

Hypersequent remove_component(const Hypersequent& h, std::size_t c);

}  // namespace hyperluk::detail
