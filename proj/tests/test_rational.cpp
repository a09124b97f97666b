#include <stdexcept>

#include "doctest.h"
#include "pwalk/rational.hpp"

using namespace pwalk;

TEST_CASE("pow3_i64") {
    CHECK(pow3_i64(0) == 1);
    CHECK(pow3_i64(1) == 3);
    CHECK(pow3_i64(4) == 81);
    CHECK(pow3_i64(39) == 4052555153018976267LL);
    CHECK_THROWS_AS((void)pow3_i64(40), std::invalid_argument);
    CHECK_THROWS_AS((void)pow3_i64(-1), std::invalid_argument);
}

TEST_CASE("EisensteinQ3 normalization") {
    CHECK(EisensteinQ3{{3, 3}, 1} == EisensteinQ3{{1, 1}, 0});
    CHECK(EisensteinQ3{{9, 3}, 2} == EisensteinQ3{{3, 1}, 1});
    CHECK(EisensteinQ3{{6, 3}, 1} == EisensteinQ3{{2, 1}, 0});
    // 4 is not divisible by 3, so the exponent stays
    CHECK(EisensteinQ3{{4, 0}, 1}.pow3 == 1);
    // zero is canonical regardless of the exponent it was built with
    CHECK(EisensteinQ3{{0, 0}, 7} == EisensteinQ3{});
    CHECK(EisensteinQ3{{0, 0}, 7}.pow3 == 0);
    CHECK(EisensteinQ3{{0, 0}, 3}.is_zero());
    CHECK_FALSE(EisensteinQ3{{0, 1}, 3}.is_zero());
    CHECK_THROWS_AS(EisensteinQ3({1, 0}, -1), std::invalid_argument);
}

TEST_CASE("EisensteinQ3 arithmetic") {
    const EisensteinQ3 x{{1, 2}, 1};   // (1 + 2z)/3
    const EisensteinQ3 y{{2, -1}, 0};  // 2 - z
    CHECK(x + y == EisensteinQ3{{7, -1}, 1});
    CHECK(x - x == EisensteinQ3{});
    CHECK(x * y == EisensteinQ3{{Eisenstein{1, 2} * Eisenstein{2, -1}}, 1});
    CHECK(kZeta * EisensteinQ3{{1, 0}, 1} == EisensteinQ3{{0, 1}, 1});
    CHECK(conj(x) == EisensteinQ3{{-1, -2}, 1});
    SUBCASE("div3 is exact division by 3") {
        const EisensteinQ3 third = div3(EisensteinQ3{{1, 0}, 0});
        CHECK(third.pow3 == 1);
        CHECK(third + third + third == EisensteinQ3{{1, 0}, 0});
        CHECK(div3(EisensteinQ3{{3, 6}, 0}) == EisensteinQ3{{1, 2}, 0});
    }
    SUBCASE("addition brings denominators to a common power") {
        // 1/3 + 2/9 = 5/9
        CHECK(EisensteinQ3{{1, 0}, 1} + EisensteinQ3{{2, 0}, 2} == EisensteinQ3{{5, 0}, 2});
    }
}

TEST_CASE("Rat3") {
    CHECK(Rat3{6, 1} == Rat3{2, 0});
    CHECK(Rat3{0, 5} == Rat3{});
    CHECK(Rat3{1, 1} + Rat3{2, 2} == Rat3{5, 2});
    CHECK(Rat3{1, 0} + Rat3{-1, 0} == Rat3{});
    // |(1 + 2z)/3|^2 = (1 - 2 + 4)/9 = 3/9 = 1/3
    CHECK(abs_sq(EisensteinQ3{{1, 2}, 1}) == Rat3{1, 1});
    CHECK(abs_sq(EisensteinQ3{{2, 1}, 0}) == Rat3{3, 0});
    CHECK_THROWS_AS(Rat3(1, -2), std::invalid_argument);
}

TEST_CASE("Rational") {
    CHECK(Rational{2, 4} == Rational{1, 2});
    CHECK(Rational{1, -2} == Rational{-1, 2});
    CHECK(Rational{0, -7} == Rational{0, 1});
    CHECK(Rational{0, -7}.den == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational{1, 2} + Rational{1, 3} == Rational{5, 6});
    CHECK(Rational{1, 2} - Rational{1, 2} == Rational{0, 1});
    CHECK(Rational{2, 3} * Rational{3, 4} == Rational{1, 2});
    CHECK(-Rational{3, 5} == Rational{-3, 5});
}

TEST_CASE("Sqrt3Ext") {
    const Sqrt3Ext s3{Rational(0), Rational(1)};  // sqrt(3)
    CHECK(s3 * s3 == Sqrt3Ext{Rational(3), Rational(0)});
    // (1 + sqrt3)^2 = 4 + 2 sqrt3
    const Sqrt3Ext one_plus{Rational(1), Rational(1)};
    CHECK(one_plus * one_plus == Sqrt3Ext{Rational(4), Rational(2)});
    CHECK(one_plus - one_plus == Sqrt3Ext{});
    CHECK(one_plus + one_plus == Sqrt3Ext{Rational(2), Rational(2)});
}

TEST_CASE("exact cartesian parts") {
    // z = a + b zeta has Re = (2a - b)/2, Im = (b/2) sqrt(3)
    CHECK(cartesian_re(EisensteinQ3{{1, 0}, 0}) == Sqrt3Ext{Rational(1), Rational(0)});
    CHECK(cartesian_im(EisensteinQ3{{1, 0}, 0}) == Sqrt3Ext{});
    CHECK(cartesian_re(EisensteinQ3{{0, 1}, 0}) == Sqrt3Ext{Rational(-1, 2), Rational(0)});
    CHECK(cartesian_im(EisensteinQ3{{0, 1}, 0}) == Sqrt3Ext{Rational(0), Rational(1, 2)});
    // zeta^2 = -1 - zeta: Re = -1/2, Im = -sqrt(3)/2
    CHECK(cartesian_re(EisensteinQ3{{-1, -1}, 0}) == Sqrt3Ext{Rational(-1, 2), Rational(0)});
    CHECK(cartesian_im(EisensteinQ3{{-1, -1}, 0}) == Sqrt3Ext{Rational(0), Rational(-1, 2)});
    // denominators fold in: (1 + 2 zeta)/3 -> Re = 0/6 = 0, Im = (2/6) sqrt3
    CHECK(cartesian_re(EisensteinQ3{{1, 2}, 1}) == Sqrt3Ext{});
    CHECK(cartesian_im(EisensteinQ3{{1, 2}, 1}) == Sqrt3Ext{Rational(0), Rational(1, 3)});
    SUBCASE("Re and Im recombine to |z|^2") {
        for (std::int64_t a = -3; a <= 3; ++a) {
            for (std::int64_t b = -3; b <= 3; ++b) {
                const EisensteinQ3 z{{a, b}, 1};
                const Sqrt3Ext re = cartesian_re(z), im = cartesian_im(z);
                const Sqrt3Ext n2 = re * re + im * im;
                const Rat3 target = abs_sq(z);
                CHECK(n2.v == Rational(0));
                CHECK(n2.u == Rational(target.num, pow3_i64(target.pow3)));
            }
        }
    }
}
