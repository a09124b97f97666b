#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pwalk/distance.hpp"
#include "pwalk/rng.hpp"
#include "pwalk/walk.hpp"

using namespace pwalk;

TEST_CASE("make_path accumulates positions") {
    const WalkPath p = make_path({2, 0}, {Step::One, Step::Zeta, Step::ZetaSq});
    CHECK(p.horizon() == 3);
    REQUIRE(p.positions.size() == 4);
    CHECK(p.positions[0] == Eisenstein{2, 0});
    CHECK(p.positions[1] == Eisenstein{3, 0});
    CHECK(p.positions[2] == Eisenstein{3, 1});
    CHECK(p.positions[3] == Eisenstein{2, 0});  // 1 + zeta + zeta^2 = 0
}

TEST_CASE("simulate is deterministic and matches the generator") {
    const WalkPath p = simulate({0, 0}, 50, 42, 7);
    const WalkPath q = simulate({0, 0}, 50, 42, 7);
    CHECK(p.steps == q.steps);
    CHECK(p.positions == q.positions);
    for (std::int64_t t = 0; t < 50; ++t)
        CHECK(p.steps[static_cast<std::size_t>(t)] ==
              step_at(42, 7, static_cast<std::uint64_t>(t)));
    const WalkPath r = simulate({0, 0}, 50, 42, 8);
    CHECK(p.steps != r.steps);  // different stream, different path
    CHECK(simulate({3, -1}, 0, 1).positions == std::vector<Eisenstein>{{3, -1}});
}

TEST_CASE("step frequencies look uniform") {
    const std::int64_t n = 100000;
    const WalkPath p = simulate({0, 0}, n, 1);
    std::int64_t hist[3] = {0, 0, 0};
    for (const Step s : p.steps) ++hist[static_cast<int>(s)];
    // 3 sigma around n/3 for a binomial(n, 1/3)
    const double sigma = std::sqrt(n * (1.0 / 3.0) * (2.0 / 3.0));
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(hist[k] - n / 3.0) < 3.0 * sigma);
}

TEST_CASE("exit indicator and one-step local time") {
    // from the origin (in A3bar): stepping to 1 leaves, stepping to zeta^2 stays
    CHECK(exit_indicator({0, 0}, Step::One) == 1);
    CHECK(exit_indicator({0, 0}, Step::Zeta) == 1);
    CHECK(exit_indicator({0, 0}, Step::ZetaSq) == 0);
    // from a point in no closure there is nothing to exit
    CHECK(exit_indicator({0, 1}, Step::One) == 0);
    CHECK(exit_indicator({0, 1}, Step::Zeta) == 0);

    const auto gone = local_time(make_path({0, 0}, {Step::One}));
    REQUIRE(gone.size() == 2);
    CHECK(gone[0] == LocalTimeLedger{});
    CHECK(gone[1] == LocalTimeLedger{0, 1, 0});  // charged to the A3bar counter
    CHECK(gone[1].L() == 1);

    const auto stayed = local_time(make_path({0, 0}, {Step::ZetaSq}));
    CHECK(stayed[1].L() == 0);
}

TEST_CASE("local time splits by sector") {
    // 0 --zeta^2--> (-1,-1) stays in A3bar, --1--> (0,-1) exits it (A2),
    // --zeta--> (0,0) has no closure to exit, --1--> (1,0) none either
    // returning to 0 at t=3 re-enters A3bar, so the final step exits it again
    const auto led = local_time(make_path({0, 0}, {Step::ZetaSq, Step::One, Step::Zeta, Step::One}));
    REQUIRE(led.size() == 5);
    CHECK(led[1] == LocalTimeLedger{0, 0, 0});
    CHECK(led[2] == LocalTimeLedger{0, 1, 0});
    CHECK(led[3] == LocalTimeLedger{0, 1, 0});
    CHECK(led[4] == LocalTimeLedger{0, 2, 0});
    // a path that exits A1bar: (2,0) --zeta--> (2,1)
    const auto a1 = local_time(make_path({2, 0}, {Step::Zeta}));
    CHECK(a1[1] == LocalTimeLedger{1, 0, 0});
    // and A5bar: (1,1) --1--> (2,1)
    const auto a5 = local_time(make_path({1, 1}, {Step::One}));
    CHECK(a5[1] == LocalTimeLedger{0, 0, 1});
    SUBCASE("ledgers are cumulative and monotone") {
        const WalkPath p = simulate({0, 0}, 400, 9);
        const auto lt = local_time(p);
        REQUIRE(lt.size() == 401);
        for (std::size_t t = 1; t < lt.size(); ++t) {
            const std::int64_t dl = lt[t].L() - lt[t - 1].L();
            CHECK(dl >= 0);
            CHECK(dl <= 1);
            CHECK(dl == exit_indicator(p.positions[t - 1], p.steps[t - 1]));
        }
    }
}

TEST_CASE("radial process on one-step paths") {
    CHECK(radial(make_path({0, 0}, {Step::One})).values == std::vector<std::int64_t>{0, -1});
    CHECK(radial(make_path({0, 0}, {Step::Zeta})).values == std::vector<std::int64_t>{0, 0});
    CHECK(radial(make_path({0, 0}, {Step::ZetaSq})).values == std::vector<std::int64_t>{0, 1});
    SUBCASE("X is norm minus local time along any path") {
        const WalkPath p = simulate({2, -2}, 300, 5);
        const auto lt = local_time(p);
        const auto x = radial(p).values;
        REQUIRE(x.size() == 301);
        for (std::size_t t = 0; t < x.size(); ++t)
            CHECK(x[t] == norm(p.positions[t]) - lt[t].L());
        SUBCASE("increments are simple-walk increments") {
            for (std::size_t t = 1; t < x.size(); ++t) {
                const std::int64_t dx = x[t] - x[t - 1];
                CHECK(dx >= -1);
                CHECK(dx <= 1);
            }
        }
    }
}

TEST_CASE("path enumeration") {
    const PathEnumeration en({0, 0}, 2);
    CHECK(en.size() == 9);
    CHECK(en.horizon() == 2);
    CHECK(en.steps(0) == std::vector<Step>{Step::One, Step::One});
    CHECK(en.steps(1) == std::vector<Step>{Step::One, Step::Zeta});
    CHECK(en.steps(3) == std::vector<Step>{Step::Zeta, Step::One});
    CHECK(en.steps(8) == std::vector<Step>{Step::ZetaSq, Step::ZetaSq});
    const WalkPath p = en.path(5);  // digits 1,2 -> zeta then zeta^2
    CHECK(p.positions.back() == kZeta + kZetaSq);
    CHECK(PathEnumeration({0, 0}, 0).size() == 1);
    CHECK(PathEnumeration({0, 0}, 13).size() == 1594323);
    CHECK_THROWS_AS(PathEnumeration({0, 0}, 14), std::invalid_argument);
    CHECK_THROWS_AS(PathEnumeration({0, 0}, -1), std::invalid_argument);
    try {
        PathEnumeration({0, 0}, 14);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("enumeration cap") != std::string::npos);
    }
    SUBCASE("indices enumerate distinct sequences") {
        const PathEnumeration e3({1, 0}, 3);
        std::vector<std::vector<Step>> all;
        for (std::int64_t i = 0; i < e3.size(); ++i) all.push_back(e3.steps(i));
        for (std::int64_t i = 1; i < e3.size(); ++i)
            CHECK(all[static_cast<std::size_t>(i - 1)] < all[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("simple walk law") {
    CHECK(simple_walk_law(0).counts == std::vector<std::uint64_t>{1});
    CHECK(simple_walk_law(1).counts == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(simple_walk_law(2).counts == std::vector<std::uint64_t>{1, 2, 3, 2, 1});
    const SimpleWalkLaw law = simple_walk_law(6);
    CHECK(law.count(0) == 141);  // central trinomial coefficient for T=6
    CHECK(law.count(-6) == 1);
    CHECK(law.count(7) == 0);
    CHECK(law.count(-100) == 0);
    SUBCASE("counts are symmetric and total 3^T") {
        for (const std::int64_t T : {3LL, 10LL, 40LL}) {
            const SimpleWalkLaw l = simple_walk_law(T);
            REQUIRE(l.counts.size() == static_cast<std::size_t>(2 * T + 1));
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < l.counts.size(); ++i) {
                total += l.counts[i];
                CHECK(l.counts[i] == l.counts[l.counts.size() - 1 - i]);
            }
            std::uint64_t want = 1;
            for (std::int64_t i = 0; i < T; ++i) want *= 3;
            CHECK(total == want);
        }
    }
    SUBCASE("probabilities agree with the double pmf") {
        const SimpleWalkLaw l = simple_walk_law(12);
        const auto pmf = simple_walk_pmf(12);
        REQUIRE(pmf.size() == 25);
        double sum = 0;
        for (std::int64_t k = -12; k <= 12; ++k) {
            CHECK(l.probability(k) ==
                  doctest::Approx(pmf[static_cast<std::size_t>(k + 12)]).epsilon(1e-12));
            sum += pmf[static_cast<std::size_t>(k + 12)];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)simple_walk_law(41), std::invalid_argument);
    CHECK_THROWS_AS((void)simple_walk_law(-1), std::invalid_argument);
    try {
        (void)simple_walk_law(41);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("law cap") != std::string::npos);
    }
}

TEST_CASE("law matches brute-force path enumeration") {
    const std::int64_t T = 7;
    const SimpleWalkLaw law = simple_walk_law(T);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(2 * T + 1), 0);
    const PathEnumeration en({0, 0}, static_cast<int>(T));
    for (std::int64_t i = 0; i < en.size(); ++i) {
        const auto x = radial(en.path(i)).values;
        ++counts[static_cast<std::size_t>(x.back() - x.front() + T)];
    }
    CHECK(counts == law.counts);
}
