#pragma once

#include <algorithm>
#include <cstdint>

#include "pwalk/eisenstein.hpp"
#include "pwalk/parallel.hpp"
#include "pwalk/regions.hpp"
#include "pwalk/report.hpp"

// Graph distance on the triangular lattice. Neighbors of a point are
// z +- 1, z +- zeta, z +- zeta^2 (the undirected lattice, not the three
// forward walk steps). The norm of z is its hop distance to the anchor
// triangle P = {0, 1, 1+zeta}.

namespace pwalk {

// Hop distance from d to the origin. With the neighbor set above, same-sign
// coordinates share diagonal steps, opposite signs cannot.
inline std::int64_t hex_dist(const Eisenstein& d) {
    const std::int64_t a = d.a, b = d.b;
    const std::int64_t aa = a < 0 ? -a : a;
    const std::int64_t ab = b < 0 ? -b : b;
    if ((a > 0 && b < 0) || (a < 0 && b > 0)) return aa + ab;
    return std::max(aa, ab);
}

inline constexpr std::array<Eisenstein, 3> kAnchors{kZero, kOne, Eisenstein{1, 1}};

// ||z||: graph distance from the anchor triangle.
inline std::int64_t norm(const Eisenstein& z) {
    std::int64_t best = hex_dist(z - kAnchors[0]);
    for (int i = 1; i < 3; ++i) best = std::min(best, hex_dist(z - kAnchors[i]));
    return best;
}

// Independent oracle for norm: breadth-first search from the three anchors
// over the six-neighbor graph. Throws if z is not reached within radius_bound
// hops ("bound exceeded").
std::int64_t norm_bfs(const Eisenstein& z, std::int64_t radius_bound);

struct GValues {
    Eisenstein g1;      // ||z+1|| + zeta^2 ||z+zeta|| + zeta ||z+zeta^2||
    Eisenstein g2;      // ||z+1|| + zeta ||z+zeta|| + zeta^2 ||z+zeta^2||
    std::int64_t g3;    // ||z+1|| + ||z+zeta|| + ||z+zeta^2|| - 3 ||z||

    friend bool operator==(const GValues&, const GValues&) = default;
};

inline GValues g(const Eisenstein& z) {
    const std::int64_t n1 = norm(z + kOne);
    const std::int64_t n2 = norm(z + kZeta);
    const std::int64_t n3 = norm(z + kZetaSq);
    // n1 + n2 zeta^2 + n3 zeta = (n1 - n2) + (n3 - n2) zeta
    return {Eisenstein{checked_sub(n1, n2), checked_sub(n3, n2)},
            Eisenstein{checked_sub(n1, n3), checked_sub(n2, n3)},
            checked_sub(checked_add(checked_add(n1, n2), n3), checked_mul(3, norm(z)))};
}

// The region-constant values that g takes on each label.
GValues region_g_table(RegionLabel label);

// Check g(z) == region_g_table(classify(z)) for every |a|,|b| <= radius.
VerificationReport verify_tables(std::int64_t radius, Exec exec = Exec::Parallel);

// Same scan against a caller-supplied table (negative controls in tests).
VerificationReport verify_tables_against(std::int64_t radius, GValues (*table)(RegionLabel),
                                         Exec exec);

}  // namespace pwalk
