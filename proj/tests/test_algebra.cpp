#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "tq/presentation.hpp"

using namespace tq;

namespace {

Monomial mono(std::vector<std::uint32_t> exp) { return Monomial{std::move(exp)}; }

// Independent rewriter: expands the RIGHTMOST descent first, recursively.
// The library rewrites leftmost-first, so agreement of the two on random
// words is a real confluence property, not a shared-code tautology.
NcPoly naive_nf(const std::vector<int>& word, const Presentation& pres) {
    for (int p = static_cast<int>(word.size()) - 2; p >= 0; --p) {
        if (word[p] <= word[p + 1]) continue;
        const NcPoly* rhs = pres.rule(word[p], word[p + 1]);
        REQUIRE(rhs != nullptr);
        NcPoly out;
        for (const auto& [m, c] : *rhs) {
            std::vector<int> next(word.begin(), word.begin() + p);
            for (int g : m.word()) next.push_back(g);
            next.insert(next.end(), word.begin() + p + 2, word.end());
            out += naive_nf(next, pres) * c;
        }
        return out;
    }
    return NcPoly::monomial(Monomial::from_sorted_word(pres.num_gens(), word));
}

}  // namespace

TEST_CASE("monomial basics") {
    Monomial u = Monomial::unit(2);
    CHECK(u.is_unit());
    CHECK(u.degree() == 0);
    CHECK(u.word().empty());

    Monomial g1 = Monomial::gen(2, 1);
    CHECK(g1.degree() == 1);
    CHECK(g1.word() == std::vector<int>{1});

    std::vector<int> w{0, 0, 1};
    Monomial m = Monomial::from_sorted_word(2, w);
    CHECK(m.degree() == 3);
    CHECK(m.exp == std::vector<std::uint32_t>{2, 1});
    CHECK(m.word() == w);
}

TEST_CASE("monomial order is degree then descending lex on exponents") {
    // 1 < x1 < x2 < x1^2 < x1 x2 < x2^2
    std::vector<Monomial> expect{mono({0, 0}), mono({1, 0}), mono({0, 1}),
                                 mono({2, 0}), mono({1, 1}), mono({0, 2})};
    for (std::size_t i = 0; i + 1 < expect.size(); ++i)
        CHECK(monomial_cmp(expect[i], expect[i + 1]) < 0);
    CHECK(monomial_cmp(expect[3], expect[3]) == 0);
}

TEST_CASE("commutative normal forms") {
    Presentation pres = Presentation::commutative({"x1", "x2"});
    std::vector<int> w{1, 0};
    CHECK(normal_form(w, pres) == NcPoly::monomial(mono({1, 1})));
    std::vector<int> w2{1, 0, 1, 0};
    CHECK(normal_form(w2, pres) == NcPoly::monomial(mono({2, 2})));
}

TEST_CASE("manin normal forms") {
    Presentation pres = Presentation::manin(Rational(2));
    // z2 z2 z1 -> 4 z1 z2^2
    std::vector<int> w{1, 1, 0};
    CHECK(normal_form(w, pres) == NcPoly::monomial(mono({1, 2}), Scalar(4)));

    // (z1 + z2)^2 = z1^2 + 3 z1 z2 + z2^2 at q = 2
    NcPoly s = NcPoly::monomial(mono({1, 0})) + NcPoly::monomial(mono({0, 1}));
    NcPoly sq = multiply(s, s, pres);
    NcPoly expect = NcPoly::monomial(mono({2, 0})) +
                    NcPoly::monomial(mono({1, 1}), Scalar(3)) +
                    NcPoly::monomial(mono({0, 2}));
    CHECK(sq == expect);
}

TEST_CASE("single generator is free") {
    Presentation pres = Presentation::single();
    std::vector<int> w{0, 0, 0};
    CHECK(normal_form(w, pres) == NcPoly::monomial(mono({3})));
    CHECK(validate_presentation(pres).empty());
}

TEST_CASE("normal form against the rightmost-first rewriter") {
    std::mt19937_64 rng(7);
    std::vector<Presentation> cases{Presentation::commutative({"a", "b", "c"}),
                                    Presentation::manin(Rational(2)),
                                    Presentation::manin(Rational(-1, 3))};
    for (const Presentation& pres : cases) {
        std::uniform_int_distribution<int> gen(0, pres.num_gens() - 1);
        std::uniform_int_distribution<int> len(0, 6);
        for (int t = 0; t < 60; ++t) {
            std::vector<int> w(static_cast<std::size_t>(len(rng)));
            for (int& g : w) g = gen(rng);
            CHECK(normal_form(w, pres) == naive_nf(w, pres));
        }
    }
}

TEST_CASE("homogeneous rules preserve degree") {
    Presentation pres = Presentation::manin(Rational(5, 7));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> gen(0, 1);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> w(5);
        for (int& g : w) g = gen(rng);
        NcPoly p = normal_form(w, pres);
        REQUIRE_FALSE(p.is_zero());
        for (const auto& [m, c] : p) CHECK(m.degree() == 5);
    }
}

TEST_CASE("multiply is associative and unital") {
    Presentation pres = Presentation::manin(Rational(2));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(0, 2);
    auto rand_poly = [&] {
        NcPoly p;
        for (int t = 0; t < 2; ++t)
            p.add_term(mono({static_cast<std::uint32_t>(e(rng)),
                             static_cast<std::uint32_t>(e(rng))}),
                       Scalar(Rational(e(rng) - 1), Rational(e(rng))));
        return p;
    };
    NcPoly one = NcPoly::one(2);
    for (int t = 0; t < 25; ++t) {
        NcPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(multiply(multiply(a, b, pres), c, pres) ==
              multiply(a, multiply(b, c, pres), pres));
        CHECK(multiply(a, one, pres) == a);
        CHECK(multiply(one, a, pres) == a);
    }
}

TEST_CASE("rule admissibility diagnostics") {
    // degree-3 right side
    NcPoly cubic = NcPoly::monomial(mono({3, 0}));
    CHECK(check_rule(2, 1, 0, cubic) == "rule degree exceeds 2");

    // x2 x1 -> x2^2 does not precede x2 x1 in the word order
    NcPoly bad = NcPoly::monomial(mono({0, 2}));
    CHECK(check_rule(2, 1, 0, bad) ==
          "rule term does not decrease the word order (rewriting would not terminate)");

    // legitimate rule
    NcPoly ok = NcPoly::monomial(mono({1, 1}), Scalar(Rational(1, 2)));
    CHECK(check_rule(2, 1, 0, ok).empty());
}

TEST_CASE("validate_presentation reports missing pairs") {
    Presentation pres;
    pres.names = {"a", "b", "c"};
    pres.rules.emplace(std::make_pair(1, 0), NcPoly::monomial(mono({1, 1, 0})));
    auto problems = validate_presentation(pres);
    CHECK(problems.size() == 2);  // (2,0) and (2,1) missing
}

TEST_CASE("confluence holds for the shipped families") {
    CHECK(check_confluence(Presentation::commutative({"a", "b", "c", "d"}), 4).consistent());
    CHECK(check_confluence(Presentation::manin(Rational(2)), 3).consistent());
    CHECK(check_confluence(Presentation::manin(Rational(-7, 2)), 3).consistent());
}

TEST_CASE("non-confluent triple is caught with its witness") {
    // z2 z1 = 2 z1 z2, z3 z2 = z2 z3, z3 z1 = z1 z3 + z2 z2: the overlap
    // z3 z2 z1 resolves to different polynomials under the two strategies.
    Presentation pres;
    pres.names = {"z1", "z2", "z3"};
    pres.rules.emplace(std::make_pair(1, 0),
                       NcPoly::monomial(mono({1, 1, 0}), Scalar(2)));
    pres.rules.emplace(std::make_pair(2, 1), NcPoly::monomial(mono({0, 1, 1})));
    NcPoly r31 = NcPoly::monomial(mono({1, 0, 1})) + NcPoly::monomial(mono({0, 2, 0}));
    pres.rules.emplace(std::make_pair(2, 0), r31);
    CHECK(validate_presentation(pres).empty());

    ConfluenceReport rep = check_confluence(pres, 3);
    REQUIRE_FALSE(rep.consistent());
    REQUIRE(rep.failures.size() == 1);
    const ConfluenceFailure& f = rep.failures[0];
    CHECK(f.word == std::vector<int>{2, 1, 0});

    NcPoly mixed = NcPoly::monomial(mono({1, 1, 1}), Scalar(2));
    CHECK(f.left == NcPoly::monomial(mono({0, 3, 0})) + mixed);
    CHECK(f.right == NcPoly::monomial(mono({0, 3, 0}), Scalar(2)) + mixed);
}

TEST_CASE("normal form rejects bad input") {
    Presentation pres = Presentation::manin(Rational(2));
    std::vector<int> w{0, 5};
    CHECK_THROWS_AS(normal_form(w, pres), std::invalid_argument);
    Presentation broken;
    broken.names = {"a", "b"};
    std::vector<int> w2{1, 0};
    CHECK_THROWS_AS(normal_form(w2, broken), std::invalid_argument);
}
