#include <vector>

#include "doctest.h"
#include "tq/symbol.hpp"

using namespace tq;

namespace {
Monomial mono(std::vector<std::uint32_t> exp) { return Monomial{std::move(exp)}; }
}  // namespace

TEST_CASE("embed and extract round trip") {
    NcPoly p = NcPoly::monomial(mono({2, 0}), Scalar(Rational(1, 2))) +
               NcPoly::monomial(mono({0, 1}), Scalar::i());
    SymbolElem g = embed_poly(p, 2);
    CHECK(in_poly_span(g));
    CHECK_FALSE(in_star_span(g));
    CHECK(extract_poly(g) == p);

    SymbolElem s = star_of(p, 2);
    CHECK(in_star_span(s));
    CHECK_THROWS_AS(extract_poly(s), std::invalid_argument);
}

TEST_CASE("the unit is in both spans") {
    SymbolElem one = SymbolElem::one(2);
    CHECK(in_poly_span(one));
    CHECK(in_star_span(one));
    CHECK(extract_poly(one) == NcPoly::one(2));
}

TEST_CASE("conjugation is an anti-linear involution") {
    SymbolElem g = SymbolElem::term(mono({1, 0}), mono({0, 2}), Scalar(Rational(2), Rational(3)));
    g += SymbolElem::one(2);
    CHECK(conjugate(conjugate(g)) == g);

    // conj(c g) = conj(c) conj(g)
    Scalar c(Rational(1), Rational(-1));
    CHECK(conjugate(g * c) == conjugate(g) * c.conj());

    // star swaps the two monomial slots
    SymbolElem flipped = conjugate(g);
    CHECK(flipped.coeff(mono({0, 2}), mono({1, 0})) == Scalar(Rational(2), Rational(-3)));
}

TEST_CASE("star_of matches conjugate of embed") {
    NcPoly k = NcPoly::monomial(mono({1, 1}), Scalar(Rational(0), Rational(5)));
    CHECK(star_of(k, 2) == conjugate(embed_poly(k, 2)));
}

TEST_CASE("left action restricts to the algebra product") {
    Presentation pres = Presentation::manin(Rational(2));
    NcPoly z1 = NcPoly::monomial(mono({1, 0}));
    NcPoly z2 = NcPoly::monomial(mono({0, 1}));
    // z2 . (z1 x 1) = (z2 z1) x 1 = 2 z1 z2 x 1
    SymbolElem acted = left_act(z2, embed_poly(z1, 2), pres);
    CHECK(acted == SymbolElem::term(mono({1, 1}), mono({0, 0}), Scalar(2)));
    CHECK(extract_poly(acted) == multiply(z2, z1, pres));
}

TEST_CASE("left action does not touch the starred slot") {
    Presentation pres = Presentation::commutative({"x1", "x2"});
    NcPoly x1 = NcPoly::monomial(mono({1, 0}));
    SymbolElem g = SymbolElem::term(mono({0, 0}), mono({0, 2}), Scalar(3));
    SymbolElem acted = left_act(x1, g, pres);
    CHECK(acted == SymbolElem::term(mono({1, 0}), mono({0, 2}), Scalar(3)));
}

TEST_CASE("star products reverse through the conjugation") {
    Presentation pres = Presentation::manin(Rational(2));
    SymbolElem s1 = star_of(NcPoly::monomial(mono({1, 0})), 2);  // z1*
    SymbolElem s2 = star_of(NcPoly::monomial(mono({0, 1})), 2);  // z2*
    // z1* z2* = (z2 z1)* = 2 (z1 z2)*
    CHECK(star_multiply(s1, s2, pres) ==
          SymbolElem::term(mono({0, 0}), mono({1, 1}), Scalar(2)));
    // z2* z1* = (z1 z2)*
    CHECK(star_multiply(s2, s1, pres) ==
          SymbolElem::term(mono({0, 0}), mono({1, 1}), Scalar(1)));
}

TEST_CASE("star product with complex coefficients conjugates them") {
    Presentation pres = Presentation::single();
    NcPoly zi = NcPoly::monomial(mono({1}), Scalar::i());  // i z
    SymbolElem a = star_of(zi, 1);                         // -i z*
    // (i z)* (i z)* = ((i z)(i z))* = (-z^2)* = -(z^2)*
    CHECK(star_multiply(a, a, pres) ==
          SymbolElem::term(mono({0}), mono({2}), Scalar(-1)));
}

TEST_CASE("star_multiply rejects arguments outside the conjugated span") {
    Presentation pres = Presentation::single();
    SymbolElem plain = embed_poly(NcPoly::monomial(mono({1})), 1);
    SymbolElem starred = star_of(NcPoly::monomial(mono({1})), 1);
    CHECK_THROWS_AS(star_multiply(plain, starred, pres), std::invalid_argument);
    CHECK_THROWS_AS(star_multiply(starred, plain, pres), std::invalid_argument);
    // the unit is fine on either side
    CHECK(star_multiply(SymbolElem::one(1), starred, pres) == starred);
}

TEST_CASE("symbol degrees") {
    SymbolElem g = SymbolElem::term(mono({2, 1}), mono({0, 1}), Scalar(1));
    g += SymbolElem::term(mono({0, 0}), mono({3, 0}), Scalar(1));
    CHECK(g.holo_degree() == 3);
    CHECK(g.anti_degree() == 3);
    CHECK(SymbolElem::zero().holo_degree() == -1);
}
