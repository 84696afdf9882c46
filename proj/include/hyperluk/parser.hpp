#pragma once

#include <string_view>

#include "hyperluk/syntax.hpp"

namespace hyperluk {

// Infer adds unseen predicate and function symbols to the signature;
// Strict rejects them.
enum class SymbolMode { Infer, Strict };

Hypersequent parse_hypersequent(std::string_view text, Signature& sig, SymbolMode mode = SymbolMode::Infer);
Sequent parse_sequent(std::string_view text, Signature& sig, SymbolMode mode = SymbolMode::Infer);
Formula parse_formula(std::string_view text, Signature& sig, SymbolMode mode = SymbolMode::Infer);
Term parse_term(std::string_view text, Signature& sig, SymbolMode mode = SymbolMode::Infer);

Hypersequent parse_hypersequent(std::string_view text);
Sequent parse_sequent(std::string_view text);
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

}  // namespace hyperluk
