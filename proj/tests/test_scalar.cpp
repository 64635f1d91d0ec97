#include "doctest.h"
#include "tq/scalar.hpp"

using tq::Rational;
using tq::Scalar;

TEST_CASE("rationals reduce and stay exact") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(1, 10) + Rational(2, 10)) * Rational(10, 3) == Rational(1));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(5, 5).is_one());
    CHECK(Rational(-2, 4).sign() == -1);
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("rational guards") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational strings") {
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(2) > Rational(3, 2));
    CHECK(Rational(1, 2) <= Rational(2, 4));
}

TEST_CASE("gaussian rational field operations") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK(i.conj() == -i);
    CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));

    Scalar z(Rational(1, 2), Rational(-1, 3));
    CHECK(z.conj().conj() == z);
    CHECK(z + (-z) == Scalar(0));
    CHECK(z * Scalar(1) == z);
    CHECK(z / z == Scalar(1));

    // norm = z zbar is real
    Scalar n = z * z.conj();
    CHECK(n.is_real());
    CHECK(n.re == Rational(1, 4) + Rational(1, 9));
}

TEST_CASE("gaussian rational division") {
    Scalar a(Rational(3), Rational(4));
    Scalar b(Rational(0), Rational(2));
    CHECK(a / b * b == a);
    CHECK(Scalar(1) / Scalar::i() == -Scalar::i());
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("scalar predicates") {
    CHECK(Scalar(0).is_zero());
    CHECK(Scalar(1).is_one());
    CHECK(Scalar(2).is_real());
    CHECK_FALSE(Scalar::i().is_real());
    CHECK_FALSE(Scalar::i().is_zero());
    CHECK(Scalar(Rational(1), Rational(0)).is_one());
}
