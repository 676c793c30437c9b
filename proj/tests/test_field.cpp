#include <doctest.h>

#include "ksforge/field.hpp"

using namespace ksforge;

namespace {

AlgebraicNumber an(const char* s) { return AlgebraicNumber::parse(s); }

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((a + Rational(1, 2)) == Rational(1));
    CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
    CHECK((Rational(1, 3) - Rational(1, 3)).is_zero());
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(Rational(1, 0), FieldError);
}

TEST_CASE("field multiplication identities") {
    auto r2 = AlgebraicNumber::sqrt2();
    auto r3 = AlgebraicNumber::sqrt3();
    auto r6 = AlgebraicNumber::sqrt6();
    CHECK(r2 * r2 == AlgebraicNumber(2));
    CHECK(r3 * r3 == AlgebraicNumber(3));
    CHECK(r6 * r6 == AlgebraicNumber(6));
    CHECK(r2 * r3 == r6);
    CHECK(r2 * r6 == AlgebraicNumber(2) * r3);
    CHECK(r3 * r6 == AlgebraicNumber(3) * r2);
}

TEST_CASE("inverses round-trip") {
    // (1/sqrt2)*(1/sqrt2) == 1/2
    auto inv_r2 = AlgebraicNumber::sqrt2().inverse();
    CHECK(inv_r2 * inv_r2 == an("1/2"));
    // a randomish dense element
    auto x = an("1/2+3r2/4-r3/5+2r6");
    CHECK(x * x.inverse() == AlgebraicNumber(1));
    CHECK((x + (-x)).is_zero());
    CHECK_THROWS_AS(AlgebraicNumber().inverse(), FieldError);
}

TEST_CASE("text round-trip") {
    for (const char* s : {"0", "1", "-1", "1/2", "-1/2", "r2/2", "-r2/4",
                          "r3/2", "r6/4", "1/2+r6/4", "3r2/4", "-r3/4",
                          "2-r2+5r3/7-r6/3"}) {
        auto x = an(s);
        CHECK(AlgebraicNumber::parse(x.str()) == x);
    }
    CHECK(an("r6/4").str() == "r6/4");
    CHECK(an("1/2+r6/4") == an("r6/4+1/2"));
    CHECK_THROWS_AS(an(""), FieldError);
    CHECK_THROWS_AS(an("r5"), FieldError);
    CHECK_THROWS_AS(an("1+"), FieldError);
}

TEST_CASE("sqrt3 over 2 sqrt2 rationalizes to r6/4") {
    // sqrt3 / (2*sqrt2) == sqrt6/4
    auto lhs = AlgebraicNumber::sqrt3() /
               (AlgebraicNumber(2) * AlgebraicNumber::sqrt2());
    CHECK(lhs == an("r6/4"));
}
