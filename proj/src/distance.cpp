#include "pwalk/distance.hpp"

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "scan.hpp"

namespace pwalk {
namespace {

// The six undirected lattice directions: +-1, +-zeta, +-zeta^2.
constexpr std::array<Eisenstein, 6> kNeighborOffsets{
    Eisenstein{1, 0},  Eisenstein{-1, 0},  Eisenstein{0, 1},
    Eisenstein{0, -1}, Eisenstein{-1, -1}, Eisenstein{1, 1},
};

std::string site_str(const Eisenstein& z) { return "z=" + to_string(z); }

std::string g_str(const GValues& v) {
    return "g1=" + to_string(v.g1) + " g2=" + to_string(v.g2) + " g3=" + std::to_string(v.g3);
}

}  // namespace

std::int64_t norm_bfs(const Eisenstein& z, std::int64_t radius_bound) {
    if (radius_bound < 0) throw std::invalid_argument("norm_bfs: negative radius bound");
    // Each hop moves each coordinate by at most 1 and the anchors sit within
    // |a|,|b| <= 1, so everything reachable in radius_bound hops fits in a
    // square of halfwidth radius_bound + 1. Keep the dense grid small enough
    // to allocate without thinking.
    if (radius_bound > 1024) throw std::invalid_argument("norm_bfs: radius bound too large");
    const std::int64_t w = radius_bound + 1;
    if (z.a < -w || z.a > w || z.b < -w || z.b > w)
        throw std::runtime_error("norm_bfs: bound exceeded");

    const std::int64_t side = 2 * w + 1;
    std::vector<std::int32_t> dist(static_cast<std::size_t>(side * side), -1);
    auto slot = [w, side](const Eisenstein& p) -> std::int64_t {
        return (p.a + w) * side + (p.b + w);
    };

    std::deque<Eisenstein> frontier;
    for (const Eisenstein& anchor : kAnchors) {
        dist[static_cast<std::size_t>(slot(anchor))] = 0;
        frontier.push_back(anchor);
    }
    while (!frontier.empty()) {
        const Eisenstein cur = frontier.front();
        frontier.pop_front();
        const std::int32_t d = dist[static_cast<std::size_t>(slot(cur))];
        if (cur == z) return d;
        if (d >= radius_bound) continue;
        for (const Eisenstein& off : kNeighborOffsets) {
            const Eisenstein next = cur + off;
            if (next.a < -w || next.a > w || next.b < -w || next.b > w) continue;
            std::int32_t& cell = dist[static_cast<std::size_t>(slot(next))];
            if (cell < 0) {
                cell = d + 1;
                frontier.push_back(next);
            }
        }
    }
    throw std::runtime_error("norm_bfs: bound exceeded");
}

GValues region_g_table(RegionLabel label) {
    switch (label) {
        case RegionLabel::P0:  return {{-1, 0}, {-1, 0}, 2};
        case RegionLabel::P1:  return {{1, 1}, {0, -1}, 2};
        case RegionLabel::P1Z: return {{0, -1}, {1, 1}, 2};
        case RegionLabel::A1:  return {{2, 1}, {1, -1}, 0};
        case RegionLabel::A2:  return {{1, 2}, {-1, -2}, 0};
        case RegionLabel::A3:  return {{-1, 1}, {-2, -1}, 0};
        case RegionLabel::A4:  return {{-2, -1}, {-1, 1}, 0};
        case RegionLabel::A5:  return {{-1, -2}, {1, 2}, 0};
        case RegionLabel::A6:  return {{1, -1}, {2, 1}, 0};
        case RegionLabel::B1:  return {{1, 0}, {1, 0}, 1};
        case RegionLabel::B2:  return {{-1, -1}, {0, 1}, 1};
        case RegionLabel::B3:  return {{0, 1}, {-1, -1}, 1};
        case RegionLabel::B4:  return {{-2, 0}, {-2, 0}, 1};
        case RegionLabel::B5:  return {{2, 2}, {0, -2}, 1};
        case RegionLabel::B6:  return {{0, -2}, {2, 2}, 1};
    }
    throw std::invalid_argument("region_g_table: bad label");
}

VerificationReport verify_tables_against(std::int64_t radius, GValues (*table)(RegionLabel),
                                         Exec exec) {
    detail::Stopwatch clock;
    const std::int64_t count = detail::ball_site_count(radius);
    VerificationReport report;
    report.name = "g-tables radius " + std::to_string(radius);
    report.checked = count;
    report.violations =
        detail::scan_collect(count, exec, [radius, table](std::int64_t i, auto emit) {
            const Eisenstein z = detail::ball_site(radius, i);
            const GValues actual = g(z);
            const RegionLabel label = classify(z);
            const GValues expected = table(label);
            if (!(actual == expected))
                emit(Violation{site_str(z) + " region=" + std::string(to_string(label)),
                               g_str(expected), g_str(actual)});
        });
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport verify_tables(std::int64_t radius, Exec exec) {
    return verify_tables_against(radius, &region_g_table, exec);
}

}  // namespace pwalk
