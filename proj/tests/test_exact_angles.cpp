#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebcz/errors.hpp"
#include "reebcz/rational.hpp"
#include "reebcz/util.hpp"

using namespace reebcz;

namespace {

// Independent oracle for floor_div: repeated subtraction (long division),
// valid for a >= 0, b > 0.
Integer floor_div_by_subtraction(Rational a, const Rational& b) {
    REQUIRE(b > 0);
    REQUIRE(a >= 0);
    Integer count = 0;
    while (a >= b) {
        a -= b;
        ++count;
    }
    return count;
}

Rational random_rational(SeededRng& rng, long max_num, long max_den) {
    const long num = static_cast<long>(rng.uniform(-max_num, max_num + 1));
    const long den = 1 + static_cast<long>(rng.uniform(0, max_den));
    return Rational(num, den);
}

} // namespace

TEST_CASE("floor_div matches the long-division oracle on the worked example") {
    // 20 / (99/20): the oracle yields 4 and this equals the first closed-form
    // floor argument at n = 4, eps = 1/100, N = 10.
    const Rational a(20);
    const Rational b(99, 20);
    CHECK(floor_div_by_subtraction(a, b) == 4);
    CHECK(floor_div(a, b) == 4);

    const Rational arg = Rational(2 * 10) / (Rational(4 + 1) * (Rational(1) - Rational(1, 100)));
    CHECK(arg == a / b);
}

TEST_CASE("floor_div basics") {
    CHECK(floor_div(Rational(0), Rational(7, 3)) == 0);
    CHECK(floor_div(Rational(4), Rational(3)) == 1);
    CHECK(floor_div(Rational(-1), Rational(2)) == -1); // floor, not truncation
    CHECK_THROWS_AS(floor_div(Rational(1), Rational(0)), domain_error);
    CHECK_THROWS_AS(floor_div(Rational(1), Rational(-2, 3)), domain_error);
}

TEST_CASE("floor_div brackets the exact quotient") {
    SeededRng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Rational a = random_rational(rng, 1000000, 999);
        Rational b       = random_rational(rng, 1000000, 999);
        if (b <= 0) {
            b = -b + Rational(1, 7);
        }
        const Integer q = floor_div(a, b);
        CHECK(Rational(q) <= a / b);
        CHECK(a / b < Rational(q + 1));
    }
}

TEST_CASE("floor_div agrees with the subtraction oracle on random nonnegative inputs") {
    SeededRng rng(11);
    for (int i = 0; i < 300; ++i) {
        const long num = static_cast<long>(rng.uniform(0, 2000));
        const long den = 1 + static_cast<long>(rng.uniform(0, 50));
        const Rational a(num, den);
        const Rational b(1 + static_cast<long>(rng.uniform(0, 60)),
                         1 + static_cast<long>(rng.uniform(0, 20)));
        CHECK(floor_div(a, b) == floor_div_by_subtraction(a, b));
    }
}

TEST_CASE("resonance predicate on angles") {
    CHECK(is_resonant(Angle(Rational(4))));
    CHECK(is_resonant(Angle(Rational(0))));
    CHECK(is_resonant(Angle(Rational(-6))));
    CHECK_FALSE(is_resonant(Angle(Rational(1, 2))));
    CHECK_FALSE(is_resonant(Angle(Rational(3))));

    // 2N(1 - eps)/(1 + eps) never lands on an even integer for eps = 1/1000,
    // N <= 100 (exhaustive exact sweep).
    const Rational eps(1, 1000);
    for (long long N = 1; N <= 100; ++N) {
        const Rational coeff = Rational(2 * N) * (Rational(1) - eps) / (Rational(1) + eps);
        CHECK_FALSE(is_resonant(Angle(coeff)));
    }
}

TEST_CASE("angle arithmetic is exact and commutative/associative") {
    SeededRng rng(13);
    for (int i = 0; i < 500; ++i) {
        const Angle a(random_rational(rng, 5000, 97));
        const Angle b(random_rational(rng, 5000, 97));
        const Angle c(random_rational(rng, 5000, 97));
        CHECK((a + b) == (b + a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK((a + b - b) == a);
    }
}

TEST_CASE("rational parse/format round trip") {
    CHECK(format_rational(Rational(1, 1000)) == "1/1000");
    CHECK(format_rational(Rational(-3, 6)) == "-1/2");
    CHECK(format_rational(Rational(5)) == "5/1");
    CHECK(parse_rational("1/1000") == Rational(1, 1000));
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("6/-4") == Rational(-3, 2)); // normalized sign
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), domain_error);

    SeededRng rng(17);
    for (int i = 0; i < 200; ++i) {
        const Rational r = random_rational(rng, 100000, 9999);
        CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("floor and ceil on negatives") {
    CHECK(floor_rational(Rational(-7, 2)) == -4);
    CHECK(ceil_rational(Rational(-7, 2)) == -3);
    CHECK(floor_rational(Rational(7, 2)) == 3);
    CHECK(is_even_integer(Rational(-8)));
    CHECK_FALSE(is_even_integer(Rational(7)));
    CHECK_FALSE(is_even_integer(Rational(4, 3)));
}
