#pragma once

#include <map>
#include <vector>

#include "tq/monomial.hpp"
#include "tq/operator.hpp"
#include "tq/presentation.hpp"
#include "tq/symbol.hpp"

namespace tq {

enum class GramKind { bargmann, qbargmann, explicit_blocks };

// Inner-product data on the monomial basis. Always graded: monomials of
// different degree pair to zero. The presets are diagonal; explicit_blocks
// carries arbitrary Hermitian positive-definite per-degree blocks in
// `entries` (stored Hermitian-filled, both orders present).
struct GramData {
    GramKind kind = GramKind::bargmann;
    Rational hbar = Rational(1);
    Rational q = Rational(1);
    std::map<MonoPair, Scalar, MonoPairLess> entries;
};

// <m, n> under the gram data. Zero when degrees differ.
Scalar gram_pairing(const Monomial& m, const Monomial& n, const GramData& gram);

struct Model {
    Presentation pres;
    GramData gram;
    int degree = 8;
    int dmax = 2;
};

// Ordered monomials of degree <= D: degree ascending, then descending lex on
// exponent vectors, so basis(2) over two generators reads
// 1, x1, x2, x1^2, x1 x2, x2^2.
std::vector<Monomial> basis(int D, const Presentation& pres);

// The truncated space: basis order, index lookup, per-degree gram blocks and
// their exact inverses. Construction validates the gram data (graded,
// Hermitian, positive definite via leading principal minors).
struct Space {
    int D = 0;
    std::vector<Monomial> elems;
    std::map<Monomial, int, MonomialLess> index;
    std::vector<int> offset;  // degree d occupies [offset[d], offset[d+1])
    std::vector<ScalarMatrix> gram;
    std::vector<ScalarMatrix> gram_inv;

    int dim() const { return static_cast<int>(elems.size()); }
    int block_size(int d) const { return offset[d + 1] - offset[d]; }
    int degree_of(int idx) const { return elems[idx].degree(); }
};

Space build_space(int D, const Presentation& pres, const GramData& gram);

}  // namespace tq
