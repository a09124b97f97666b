#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pwalk/martrep.hpp"

using namespace pwalk;

TEST_CASE("signature words") {
    CHECK(signature_from_index(0, 0) == SignatureWord{});
    CHECK(signature_from_index(2, 0) == SignatureWord{Step::One, Step::One});
    CHECK(signature_from_index(2, 5) == SignatureWord{Step::Zeta, Step::ZetaSq});
    CHECK(signature_from_index(3, 26) == SignatureWord{Step::ZetaSq, Step::ZetaSq, Step::ZetaSq});
}

TEST_CASE("basis elements") {
    const WalkPath p = make_path({0, 0}, {Step::Zeta, Step::Zeta, Step::One});
    // empty-letter word: empty product
    CHECK(onb_element({Step::One, Step::One, Step::One}, p) == kOne);
    // single dZ factor picks up the increment
    CHECK(onb_element({Step::Zeta, Step::One, Step::One}, p) == kZeta);
    // conj factor conjugates it
    CHECK(onb_element({Step::ZetaSq, Step::One, Step::One}, p) == kZetaSq);
    // dZ_1 conj(dZ_2) on increments (zeta, zeta): zeta * zeta^2 = 1
    CHECK(onb_element({Step::Zeta, Step::ZetaSq, Step::One}, p) == kOne);
    // words may be shorter than the path but not longer
    CHECK(onb_element({Step::Zeta}, p) == kZeta);
    CHECK_THROWS_AS((void)onb_element(SignatureWord(4, Step::One), p), std::invalid_argument);
    SUBCASE("every basis element is a unit") {
        const PathEnumeration en({0, 0}, 4);
        for (std::int64_t pi = 0; pi < en.size(); pi += 7) {
            const WalkPath path = en.path(pi);
            for (std::int64_t wi = 0; wi < 81; wi += 5)
                CHECK(abs_sq(onb_element(signature_from_index(4, wi), path)) == 1);
        }
    }
}

TEST_CASE("gram identity") {
    for (int t = 1; t <= 3; ++t) {
        const auto serial = gram_check(t, Exec::Serial);
        CAPTURE(t);
        CHECK(serial.pass());
        const std::int64_t n = t == 1 ? 3 : t == 2 ? 9 : 27;
        CHECK(serial.checked == n * n);
        CHECK(same_outcome(serial, gram_check(t, Exec::Parallel)));
    }
    CHECK_THROWS_AS((void)gram_check(6), std::invalid_argument);
    CHECK_THROWS_AS((void)gram_check(-1), std::invalid_argument);
}

TEST_CASE("adapted functionals evaluate on prefixes") {
    const AdaptedFunctional Z = adapted_z({2, -1}, 3);
    CHECK(Z.value(0, 0) == EisensteinQ3{{2, -1}, 0});
    // prefix index 1 at t=1 is the single step zeta
    CHECK(Z.value(1, 1) == EisensteinQ3{{2, 0}, 0});
    CHECK(Z.name() == "Z");
    CHECK(Z.martingale_hint());
    const AdaptedFunctional R = adapted_radial({0, 0}, 3);
    // step 1 from the origin: ||1|| - dL = 0 - 1 = -1
    CHECK(R.value(1, 0) == EisensteinQ3{{-1, 0}, 0});
    CHECK(R.value(1, 2) == EisensteinQ3{{1, 0}, 0});
    const AdaptedFunctional T = adapted_time({0, 0}, 3);
    CHECK(T.value(2, 4) == EisensteinQ3{{2, 0}, 0});
    CHECK_FALSE(T.martingale_hint());
    CHECK_THROWS_AS((void)Z.value(4, 0), std::out_of_range);
    CHECK_THROWS_AS((void)Z.value(1, 3), std::out_of_range);
    SUBCASE("random functionals are seed-stable") {
        const AdaptedFunctional r1 = adapted_random({0, 0}, 3, 5);
        const AdaptedFunctional r2 = adapted_random({0, 0}, 3, 5);
        for (std::int64_t p = 0; p < 27; ++p) CHECK(r1.value(3, p) == r2.value(3, p));
    }
}

TEST_CASE("expansion coefficients of the coordinate martingales") {
    // dZ_t expands as 1 * dZ_(1,...,1,zeta): coefficient 1 at the word with
    // a single trailing zeta, 0 everywhere else
    const AdaptedFunctional Z = adapted_z({0, 0}, 3);
    for (int t = 1; t <= 3; ++t) {
        const auto x = coefficients(Z, t);
        const std::int64_t n = t == 1 ? 3 : t == 2 ? 9 : 27;
        REQUIRE(static_cast<std::int64_t>(x.size()) == n);
        for (std::int64_t i = 0; i < n; ++i) {
            if (i == 1)
                CHECK(x[static_cast<std::size_t>(i)] == EisensteinQ3{{1, 0}, 0});
            else
                CHECK(x[static_cast<std::size_t>(i)].is_zero());
        }
    }
    // conj flips the trailing letter to zeta^2 (index 2)
    const auto xc = coefficients(adapted_conj_z({0, 0}, 2), 2);
    for (std::int64_t i = 0; i < 9; ++i) {
        if (i == 2)
            CHECK(xc[static_cast<std::size_t>(i)] == EisensteinQ3{{1, 0}, 0});
        else
            CHECK(xc[static_cast<std::size_t>(i)].is_zero());
    }
    // constants have no expansion at all
    const AdaptedFunctional C("const", {0, 0}, 2,
                              [](const WalkPath&) { return EisensteinQ3{{4, 2}, 0}; }, true);
    for (const auto& coef : coefficients(C, 2)) CHECK(coef.is_zero());
}

TEST_CASE("parseval sum for the radial martingale") {
    // E|dX_t|^2 = sum_S |x_S|^2: with increments uniform on {-1,0,1} the
    // left side is 2/3 for X the radial process
    const AdaptedFunctional R = adapted_radial({0, 0}, 4);
    for (int t = 2; t <= 4; ++t) {
        const auto x = coefficients(R, t);
        Rat3 sum{};
        for (const auto& c : x) sum = sum + abs_sq(c);
        // E|dX|^2 by direct enumeration
        const PathEnumeration en({0, 0}, t);
        std::int64_t total_sq = 0;
        for (std::int64_t i = 0; i < en.size(); ++i) {
            const WalkPath path = en.path(i);
            const auto vals = radial(path).values;
            const std::int64_t d = vals[static_cast<std::size_t>(t)] -
                                   vals[static_cast<std::size_t>(t - 1)];
            total_sq += d * d;
        }
        int pw = 0;
        std::int64_t n = 1;
        while (pw < t) {
            n *= 3;
            ++pw;
        }
        CAPTURE(t);
        CHECK(sum == Rat3{total_sq, t});
        CHECK(n == en.size());
    }
}

TEST_CASE("representation reconstructs the increments") {
    for (const int T : {1, 3, 5}) {
        const AdaptedFunctional Z = adapted_z({1, -1}, T);
        const auto rep = representation_check(Z, T, Exec::Serial);
        CAPTURE(T);
        CHECK(rep.pass());
        CHECK(same_outcome(rep, representation_check(Z, T, Exec::Parallel)));
    }
    CHECK(representation_check(adapted_conj_z({0, 0}, 4), 4).pass());
    CHECK(representation_check(adapted_radial({0, 0}, 5), 5).pass());
    CHECK(representation_check(adapted_radial({2, 0}, 4), 4).pass());
    CHECK(representation_check(adapted_random({0, 0}, 4, 99), 4).pass());
    // pure drift: zero martingale part, exact reconstruction regardless
    CHECK(representation_check(adapted_time({0, 0}, 4), 4).pass());
    CHECK_THROWS_AS((void)representation_check(adapted_z({0, 0}, 8), 8), std::invalid_argument);
}

TEST_CASE("a broken martingale hint is caught") {
    // claim the (non-martingale) time process is a martingale: the drift
    // sums are 1 on every prefix, so every prefix is reported
    const AdaptedFunctional lie("time, mislabeled", {0, 0}, 3,
                                [](const WalkPath& p) {
                                    return EisensteinQ3{{p.horizon(), 0}, 0};
                                },
                                true);
    const auto rep = representation_check(lie, 3, Exec::Serial);
    CHECK_FALSE(rep.pass());
    CHECK(rep.violations.size() > 0);
    bool drift_mentioned = false;
    for (const auto& v : rep.violations)
        drift_mentioned = drift_mentioned || v.location.find("drift") != std::string::npos;
    CHECK(drift_mentioned);
    CHECK(same_outcome(rep, representation_check(lie, 3, Exec::Parallel)));
}
