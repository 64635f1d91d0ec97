#pragma once

#include <compare>
#include <map>
#include <vector>

#include "tq/model.hpp"

namespace tq {

// One letter of the free algebra on {G_z_i} ∪ {G_z_i*}. Letter order puts
// every plain letter before every starred one, then compares generator index;
// this is the order under which relation leading terms are normalized.
struct Letter {
    bool anti = false;
    int gen = 0;
    auto operator<=>(const Letter&) const = default;
};

// A word in the free algebra; the empty word is the unit. Degree = length.
using FreeWord = std::vector<Letter>;

// Degree-then-lex order on free words.
struct WordLess {
    bool operator()(const FreeWord& a, const FreeWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

struct Relation {
    std::map<FreeWord, Scalar, WordLess> terms;

    bool is_zero() const { return terms.empty(); }
    int top_degree() const {
        return terms.empty() ? -1 : static_cast<int>(terms.rbegin()->first.size());
    }
    // Largest word, the normalization pivot.
    const FreeWord& leading_word() const { return terms.rbegin()->first; }

    void add_term(const FreeWord& w, const Scalar& c);
    Relation& operator+=(const Relation& o);
    Relation operator*(const Scalar& c) const;
    bool operator==(const Relation& o) const { return terms == o.terms; }
};

// Evaluation morphism: plain letters to creation operators, starred letters
// to annihilation operators, words to left-to-right operator products.
// Requires hbar = 1 and degree(w) <= model.dmax.
TruncatedOperator pi_eval(const FreeWord& w, const Space& sp, const Model& model);

struct RelationFinding {
    std::vector<Relation> relations;  // echelon basis, leading coefficient 1
    int dim_at_D = 0;                 // kernel dimension at truncation D
    int dim_at_D2 = 0;                // and at truncation D+2 (the certified one)
    int D = 0;
    int dmax = 0;
};

// Kernel of pi on words of degree <= dmax, certified at truncations D and
// D+2. Only the part of the kernel confirmed at both is returned.
RelationFinding find_relations(const Model& model, int dmax, int D);

// Parts R_0..R_n by word degree, zero gaps included. Rejects R = 0.
std::vector<Relation> homogeneous_parts(const Relation& r);

struct ClassicalRelation {
    Relation part;         // R_n, the top-degree homogeneous part
    bool in_kernel = false;  // does R_n itself vanish under pi at both truncations
};

ClassicalRelation classical_relation(const Relation& r, const Model& model);

// True when the relation evaluates to the zero matrix on the validity
// region at truncation T. This is the certificate behind every kernel claim.
bool evaluates_to_zero(const Relation& r, const Model& model, int T);

// Polynomial in the formal symbol s, s^2 = hbar: power -> coefficient.
using SPoly = std::map<int, Scalar>;

struct DeformedRelation {
    std::map<FreeWord, SPoly, WordLess> terms;
    int top_degree = 0;
};

// Sum over j of s^(n-j) R_j. Specializing s=1 recovers r, s=0 the classical
// relation. Rejects r = 0.
DeformedRelation hbar_deform(const Relation& r);

Relation specialize(const DeformedRelation& d, const Rational& s);

struct DqReport {
    std::vector<Relation> classical;  // top parts of the inputs, coefficient-normalized
    std::vector<int> graded_dims;     // dim of (F / <classical>)_d for d = 0..bound
    int bound = 0;
    int num_letters = 0;
};

// Presentation of the dequantized algebra: generators, the classical
// relations, and exact graded dimensions of the quotient up to `bound`.
DqReport dequantize(const std::vector<Relation>& relations, int num_gens, int bound);

}  // namespace tq
