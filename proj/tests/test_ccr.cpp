#include <random>
#include <vector>

#include "doctest.h"
#include "tq/ccr.hpp"
#include "tq/quantize.hpp"
#include "tq/render.hpp"

using namespace tq;

namespace {

Letter cre(int g) { return Letter{false, g}; }
Letter ann(int g) { return Letter{true, g}; }

Relation make_rel(std::initializer_list<std::pair<FreeWord, Scalar>> terms) {
    Relation r;
    for (const auto& [w, c] : terms) r.add_term(w, c);
    return r;
}

Model bargmann1() {
    Model m;
    m.pres = Presentation::single();
    m.gram.kind = GramKind::bargmann;
    return m;
}

Model bargmann2() {
    Model m;
    m.pres = Presentation::commutative({"z1", "z2"});
    m.gram.kind = GramKind::bargmann;
    return m;
}

Model qbargmann(long q) {
    Model m;
    m.pres = Presentation::single();
    m.gram.kind = GramKind::qbargmann;
    m.gram.q = Rational(q);
    return m;
}

// a a* - a* a - 1 in word form: G[z*]G[z] evaluates to A A*.
Relation canonical_ccr() {
    return make_rel({{{ann(0), cre(0)}, Scalar(1)},
                     {{cre(0), ann(0)}, Scalar(-1)},
                     {{}, Scalar(-1)}});
}

}  // namespace

TEST_CASE("letter and word order") {
    CHECK(cre(0) < cre(1));
    CHECK(cre(1) < ann(0));  // every creation letter precedes every annihilation
    CHECK(ann(0) < ann(1));

    WordLess less;
    CHECK(less({}, {cre(0)}));
    CHECK(less({ann(1)}, {cre(0), cre(0)}));  // shorter first
    CHECK(less({cre(0), ann(1)}, {cre(1), cre(0)}));
}

TEST_CASE("relation term bookkeeping") {
    Relation r;
    r.add_term({cre(0)}, Scalar(2));
    r.add_term({cre(0)}, Scalar(-2));
    CHECK(r.is_zero());

    r = canonical_ccr();
    CHECK(r.top_degree() == 2);
    CHECK(r.leading_word() == FreeWord{ann(0), cre(0)});
    CHECK(r.terms.size() == 3);

    Relation sum = r;
    sum += r * Scalar(-1);
    CHECK(sum.is_zero());
}

TEST_CASE("pi_eval multiplies letter operators in word order") {
    Model m = bargmann1();
    Space sp = build_space(6, m.pres, m.gram);

    TruncatedOperator t = pi_eval({ann(0), cre(0)}, sp, m);
    for (int n = 0; n <= 4; ++n) CHECK(t.mat.at(n, n) == Scalar(n + 1));

    TruncatedOperator u = pi_eval({cre(0), ann(0)}, sp, m);
    for (int n = 0; n <= 4; ++n) CHECK(u.mat.at(n, n) == Scalar(n));

    // morphism property on random splits
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(0, 1), len(0, 2);
    m.dmax = 3;
    for (int t2 = 0; t2 < 30; ++t2) {
        FreeWord u2(static_cast<std::size_t>(len(rng))), v2(1);
        for (Letter& l : u2) l = pick(rng) ? ann(0) : cre(0);
        for (Letter& l : v2) l = pick(rng) ? ann(0) : cre(0);
        FreeWord uv = u2;
        uv.insert(uv.end(), v2.begin(), v2.end());
        TruncatedOperator split = compose(pi_eval(u2, sp, m), pi_eval(v2, sp, m), sp.D);
        TruncatedOperator whole = pi_eval(uv, sp, m);
        CHECK(split.mat == whole.mat);
        CHECK(split.raise == whole.raise);
    }
}

TEST_CASE("pi_eval guards") {
    Model m = bargmann1();
    Space sp = build_space(6, m.pres, m.gram);
    FreeWord deep{cre(0), cre(0), cre(0)};
    CHECK_THROWS_AS(pi_eval(deep, sp, m), std::invalid_argument);

    Model h = bargmann1();
    h.gram.hbar = Rational(1, 2);
    Space sph = build_space(6, h.pres, h.gram);
    CHECK_THROWS_AS(pi_eval({cre(0)}, sph, h), std::invalid_argument);

    Space tight = build_space(3, m.pres, m.gram);
    CHECK_THROWS_AS(pi_eval({cre(0)}, tight, m), std::invalid_argument);
}

TEST_CASE("single-mode ccr is rediscovered exactly") {
    RelationFinding f = find_relations(bargmann1(), 2, 8);
    CHECK(f.dim_at_D == 1);
    CHECK(f.dim_at_D2 == 1);
    REQUIRE(f.relations.size() == 1);
    CHECK(f.relations[0] == canonical_ccr());
    CHECK(relation_str(f.relations[0], {"z"}) == "G[z*]·G[z] - G[z]·G[z*] - 1");
}

TEST_CASE("the found relation really annihilates, at both truncations") {
    Model m = bargmann1();
    RelationFinding f = find_relations(m, 2, 8);
    for (const Relation& r : f.relations) {
        CHECK(evaluates_to_zero(r, m, 8));
        CHECK(evaluates_to_zero(r, m, 10));
    }
    // a non-relation does not
    CHECK_FALSE(evaluates_to_zero(make_rel({{{ann(0), cre(0)}, Scalar(1)}}), m, 8));
    // truncation too small to hold the words
    CHECK_THROWS_AS(evaluates_to_zero(canonical_ccr(), m, 0), std::invalid_argument);
}

TEST_CASE("q-oscillator relation at q = 2") {
    RelationFinding f = find_relations(qbargmann(2), 2, 8);
    CHECK(f.dim_at_D == 1);
    CHECK(f.dim_at_D2 == 1);
    REQUIRE(f.relations.size() == 1);
    Relation expect = make_rel({{{ann(0), cre(0)}, Scalar(1)},
                                {{cre(0), ann(0)}, Scalar(-2)},
                                {{}, Scalar(-1)}});
    CHECK(f.relations[0] == expect);
}

TEST_CASE("two-mode ccr kernel is exactly six-dimensional") {
    RelationFinding f = find_relations(bargmann2(), 2, 8);
    CHECK(f.dim_at_D == 6);
    CHECK(f.dim_at_D2 == 6);
    REQUIRE(f.relations.size() == 6);

    std::vector<Relation> expect;
    // creation-creation commutator
    expect.push_back(make_rel({{{cre(1), cre(0)}, Scalar(1)},
                               {{cre(0), cre(1)}, Scalar(-1)}}));
    // a_1 a_1* - a_1* a_1 - 1
    expect.push_back(make_rel({{{ann(0), cre(0)}, Scalar(1)},
                               {{cre(0), ann(0)}, Scalar(-1)},
                               {{}, Scalar(-1)}}));
    // cross commutators, no constant term
    expect.push_back(make_rel({{{ann(0), cre(1)}, Scalar(1)},
                               {{cre(1), ann(0)}, Scalar(-1)}}));
    expect.push_back(make_rel({{{ann(1), cre(0)}, Scalar(1)},
                               {{cre(0), ann(1)}, Scalar(-1)}}));
    // a_2 a_2* - a_2* a_2 - 1
    expect.push_back(make_rel({{{ann(1), cre(1)}, Scalar(1)},
                               {{cre(1), ann(1)}, Scalar(-1)},
                               {{}, Scalar(-1)}}));
    // annihilation-annihilation commutator
    expect.push_back(make_rel({{{ann(1), ann(0)}, Scalar(1)},
                               {{ann(0), ann(1)}, Scalar(-1)}}));
    CHECK(f.relations == expect);
}

TEST_CASE("manin gram narrows the kernel") {
    Model m;
    m.pres = Presentation::manin(Rational(2));
    m.gram.kind = GramKind::bargmann;
    RelationFinding f = find_relations(m, 2, 8);
    CHECK(f.dim_at_D == 5);
    CHECK(f.relations.size() == 5);
    for (const Relation& r : f.relations) {
        CHECK(evaluates_to_zero(r, m, 8));
        CHECK(evaluates_to_zero(r, m, 10));
    }
    // no single-mode-style a_1 a_1* relation survives the q-twist at dmax 2
    for (const Relation& r : f.relations)
        CHECK(r.leading_word() != FreeWord{ann(0), cre(0)});
}

TEST_CASE("dmax 1 finds nothing on a faithful model") {
    RelationFinding f = find_relations(bargmann1(), 1, 8);
    CHECK(f.dim_at_D == 0);
    CHECK(f.dim_at_D2 == 0);
    CHECK(f.relations.empty());
}

TEST_CASE("find_relations guards") {
    CHECK_THROWS_AS(find_relations(bargmann1(), 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(find_relations(bargmann1(), 2, 3), std::invalid_argument);
    Model h = bargmann1();
    h.gram.hbar = Rational(2);
    CHECK_THROWS_AS(find_relations(h, 2, 8), std::invalid_argument);
}

TEST_CASE("homogeneous decomposition") {
    Relation r = canonical_ccr();
    auto parts = homogeneous_parts(r);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == make_rel({{{}, Scalar(-1)}}));
    CHECK(parts[1].is_zero());
    CHECK(parts[2] == make_rel({{{ann(0), cre(0)}, Scalar(1)},
                                {{cre(0), ann(0)}, Scalar(-1)}}));
    CHECK_THROWS_AS(homogeneous_parts(Relation{}), std::invalid_argument);
}

TEST_CASE("classical relation and kernel membership") {
    Model m = bargmann1();
    ClassicalRelation cl = classical_relation(canonical_ccr(), m);
    CHECK(cl.part == make_rel({{{ann(0), cre(0)}, Scalar(1)},
                               {{cre(0), ann(0)}, Scalar(-1)}}));
    CHECK_FALSE(cl.in_kernel);  // a a* - a* a = 1, not 0

    // a homogeneous relation is its own classical part and stays in the kernel
    Model m2 = bargmann2();
    Relation cc = make_rel({{{cre(1), cre(0)}, Scalar(1)},
                            {{cre(0), cre(1)}, Scalar(-1)}});
    ClassicalRelation cl2 = classical_relation(cc, m2);
    CHECK(cl2.part == cc);
    CHECK(cl2.in_kernel);
}

TEST_CASE("hbar deformation and specialization") {
    Relation r = canonical_ccr();
    DeformedRelation d = hbar_deform(r);
    CHECK(d.top_degree == 2);
    REQUIRE(d.terms.count(FreeWord{}) == 1);
    CHECK(d.terms.at(FreeWord{}).at(2) == Scalar(-1));
    CHECK(d.terms.at(FreeWord{cre(0), ann(0)}).at(0) == Scalar(-1));
    CHECK(d.terms.at(FreeWord{ann(0), cre(0)}).at(0) == Scalar(1));

    CHECK(specialize(d, Rational(1)) == r);
    Relation classical = specialize(d, Rational(0));
    CHECK(classical == make_rel({{{ann(0), cre(0)}, Scalar(1)},
                                 {{cre(0), ann(0)}, Scalar(-1)}}));
    Relation at3 = specialize(d, Rational(3));
    CHECK(at3.terms.at(FreeWord{}) == Scalar(-9));

    CHECK_THROWS_AS(hbar_deform(Relation{}), std::invalid_argument);
    CHECK(deformed_str(d, {"z"}) == "G[z*]·G[z] - G[z]·G[z*] - hbar·1");
}

TEST_CASE("deformation powers scale pairs of degrees") {
    // every s-power is top_degree - word degree, so even powers carry whole
    // hbar factors and odd powers carry half-integer ones
    Relation r = make_rel({{{ann(0), cre(0), cre(0)}, Scalar(1)},
                           {{cre(0)}, Scalar(-3)},
                           {{}, Scalar(5)}});
    DeformedRelation d = hbar_deform(r);
    CHECK(d.terms.at(FreeWord{cre(0)}).at(2) == Scalar(-3));
    CHECK(d.terms.at(FreeWord{}).at(3) == Scalar(5));
    Relation back = specialize(d, Rational(2));
    CHECK(back.terms.at(FreeWord{cre(0)}) == Scalar(-12));  // -3 * 2^2
    CHECK(back.terms.at(FreeWord{}) == Scalar(40));         // 5 * 2^3
}

TEST_CASE("dequantize the single-mode relation") {
    RelationFinding f = find_relations(bargmann1(), 2, 8);
    DqReport rep = dequantize(f.relations, 1, 10);
    CHECK(rep.num_letters == 2);
    REQUIRE(rep.classical.size() == 1);
    CHECK(rep.classical[0] == make_rel({{{ann(0), cre(0)}, Scalar(1)},
                                        {{cre(0), ann(0)}, Scalar(-1)}}));
    std::vector<int> expect;
    for (int d = 0; d <= 10; ++d) expect.push_back(d + 1);
    CHECK(rep.graded_dims == expect);
}

TEST_CASE("dequantize with no relations is free") {
    DqReport rep = dequantize({}, 1, 3);
    CHECK(rep.graded_dims == std::vector<int>{1, 2, 4, 8});
}

TEST_CASE("dequantize two modes to four commuting letters") {
    RelationFinding f = find_relations(bargmann2(), 2, 8);
    DqReport rep = dequantize(f.relations, 2, 3);
    // all six classical parts are commutators, so the quotient is the
    // polynomial ring on 4 letters: dims C(d+3, 3)
    CHECK(rep.graded_dims == std::vector<int>{1, 4, 10, 20});
}

TEST_CASE("dequantize the q-plane") {
    RelationFinding f = find_relations(qbargmann(2), 2, 8);
    DqReport rep = dequantize(f.relations, 1, 4);
    // z* z = 2 z z* has the same PBW dimensions as the commutative plane
    CHECK(rep.graded_dims == std::vector<int>{1, 2, 3, 4, 5});
    REQUIRE(rep.classical.size() == 1);
    // classical part normalized to leading coefficient 1
    CHECK(rep.classical[0].terms.at(FreeWord{ann(0), cre(0)}) == Scalar(1));
    CHECK(rep.classical[0].terms.at(FreeWord{cre(0), ann(0)}) == Scalar(Rational(-2)));
}

TEST_CASE("dequantize guards") {
    CHECK_THROWS_AS(dequantize({}, 1, -1), std::invalid_argument);
}
