#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tq/ncpoly.hpp"

namespace tq {

/// A quadratic straightening presentation of the polynomial algebra: for
/// every pair of generators j > i, one rule x_j x_i -> sum of ordered
/// monomials of degree <= 2. Normal forms are spanned by ordered monomials
/// (a PBW-type basis once the rules are confluent).
struct Presentation {
    std::vector<std::string> names;
    /// Keyed by (j, i) with j > i, 0-based.
    std::map<std::pair<int, int>, NcPoly> rules;

    int num_gens() const { return static_cast<int>(names.size()); }

    const NcPoly* rule(int j, int i) const {
        auto it = rules.find({j, i});
        return it == rules.end() ? nullptr : &it->second;
    }

    /// x_j x_i -> x_i x_j for all pairs.
    static Presentation commutative(std::vector<std::string> names);

    /// Two generators with x2 x1 -> q x1 x2.
    static Presentation manin(const Rational& q,
                              std::string a = "z1", std::string b = "z2");

    /// One generator, no rules.
    static Presentation single(std::string name = "z");
};

/// Checks one straightening rule x_j x_i -> rhs. Returns an error message,
/// empty if the rule is admissible. Admissible means: every right-hand term
/// is an ordered monomial of degree <= 2 that precedes the word x_j x_i in
/// the degree-then-lex word order. That strict decrease is what guarantees
/// rewriting terminates.
std::string check_rule(int num_gens, int j, int i, const NcPoly& rhs);

/// Full presentation validation: generator count, rule keys, every pair
/// j > i covered exactly once, every rule admissible.
std::vector<std::string> validate_presentation(const Presentation& pres);

/// Expands an arbitrary word of generator indices into its unique linear
/// combination of ordered monomials, rewriting the leftmost descent first.
/// Total on valid input; the result is strategy-independent exactly when the
/// presentation is confluent.
NcPoly normal_form(std::span<const int> word, const Presentation& pres);

/// Product in the presented algebra: distribute, concatenate words,
/// restraighten.
NcPoly multiply(const NcPoly& p, const NcPoly& r, const Presentation& pres);

struct ConfluenceFailure {
    std::vector<int> word;   // witness word, generator indices
    NcPoly left;             // normal form, leftmost-descent strategy
    NcPoly right;            // normal form, rightmost-descent strategy
};

struct ConfluenceReport {
    int degree_bound = 0;
    std::vector<ConfluenceFailure> failures;
    bool consistent() const { return failures.empty(); }
};

/// Reduces every word of degree <= degree_bound under both the leftmost- and
/// rightmost-descent strategies and reports every mismatch. All critical
/// overlaps x_k x_j x_i (k > j > i) of a quadratic system have degree 3, so
/// any bound >= 3 decides confluence; larger bounds re-check the same facts
/// on longer words.
ConfluenceReport check_confluence(const Presentation& pres, int degree_bound);

}  // namespace tq
