#pragma once

#include <string>
#include <vector>

#include "tq/ccr.hpp"
#include "tq/ncpoly.hpp"
#include "tq/symbol.hpp"

namespace tq {

std::string rat_str(const Rational& r);

// "0", "2", "-1/2", "1i", "2-1i", "1/2+1/3i". This is the exact-entry
// format used in report matrices.
std::string scalar_str(const Scalar& c);

// "1", "x1", "x1^2 x2"
std::string monomial_str(const Monomial& m, const std::vector<std::string>& names);

// Terms highest first in the straightening word order:
// "x2^2 + 3 x1 x2 - 1/2"
std::string poly_str(const NcPoly& p, const std::vector<std::string>& names);

// Terms of A = P⊗P*: "2 x1·x2* + 1" (unit part of a pair omitted)
std::string symbol_str(const SymbolElem& g, const std::vector<std::string>& names);

std::string letter_str(const Letter& l, const std::vector<std::string>& names);

// "G[z*]·G[z]"; the empty word renders as "1"
std::string word_str(const FreeWord& w, const std::vector<std::string>& names);

// Leading term first: "G[z*]·G[z] - G[z]·G[z*] - 1"
std::string relation_str(const Relation& r, const std::vector<std::string>& names);

// s-powers appear as half-integer powers of hbar:
// "G[z*]·G[z] - G[z]·G[z*] - hbar·1"
std::string deformed_str(const DeformedRelation& d, const std::vector<std::string>& names);

}  // namespace tq
