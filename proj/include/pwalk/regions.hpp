#pragma once

#include <optional>

#include "pwalk/eisenstein.hpp"

// The 15-part partition of Z[zeta] around the anchor triangle
// P = {0, 1, 1+zeta}: three anchor points, six open sectors A1..A6 and six
// boundary rays B1..B6, plus the three closed sectors built from them.
//
// In (a, b) coordinates the atlas is
//
//   P0 (0,0)   P1 (1,0)   P1Z (1,1)
//   B1  b = 0, a >= 2      B2  a = 1, b >= 2      B3  a = b <= -1
//   B4  b = 0, a <= -1     B5  a = 1, b <= -1     B6  a = b >= 2
//   A1  a >= 2, b <= -1    A2  b <= -1, b+1 <= a <= 0
//   A3  b <= -1, a <= b-1  A4  a <= 0, b >= 1
//   A5  2 <= a <= b-1      A6  b >= 1, a >= b+1

namespace pwalk {

enum class RegionLabel : std::uint8_t {
    P0, P1, P1Z,
    A1, A2, A3, A4, A5, A6,
    B1, B2, B3, B4, B5, B6,
};

inline constexpr int kRegionLabelCount = 15;

inline RegionLabel classify(const Eisenstein& z) {
    const std::int64_t a = z.a, b = z.b;
    if (b == 0) {
        if (a == 0) return RegionLabel::P0;
        if (a == 1) return RegionLabel::P1;
        return a >= 2 ? RegionLabel::B1 : RegionLabel::B4;
    }
    if (b >= 1) {
        if (a <= 0) return RegionLabel::A4;
        if (a == 1) return b == 1 ? RegionLabel::P1Z : RegionLabel::B2;
        if (a == b) return RegionLabel::B6;
        return a > b ? RegionLabel::A6 : RegionLabel::A5;
    }
    // b <= -1
    if (a >= 2) return RegionLabel::A1;
    if (a == 1) return RegionLabel::B5;
    if (a >= b + 1) return RegionLabel::A2;
    return a == b ? RegionLabel::B3 : RegionLabel::A3;
}

inline const char* to_string(RegionLabel r) {
    switch (r) {
        case RegionLabel::P0: return "P0";
        case RegionLabel::P1: return "P1";
        case RegionLabel::P1Z: return "P1Z";
        case RegionLabel::A1: return "A1";
        case RegionLabel::A2: return "A2";
        case RegionLabel::A3: return "A3";
        case RegionLabel::A4: return "A4";
        case RegionLabel::A5: return "A5";
        case RegionLabel::A6: return "A6";
        case RegionLabel::B1: return "B1";
        case RegionLabel::B2: return "B2";
        case RegionLabel::B3: return "B3";
        case RegionLabel::B4: return "B4";
        case RegionLabel::B5: return "B5";
        case RegionLabel::B6: return "B6";
    }
    return "?";
}

// The closed sectors: A1bar = A1|B1|B5|{1}, A3bar = A3|B3|B4|{0},
// A5bar = A5|B2|B6|{1+zeta}. Exits from these drive the local time.
enum class ClosureId : std::uint8_t { A1Bar, A3Bar, A5Bar };

inline constexpr std::array<ClosureId, 3> kClosures{ClosureId::A1Bar, ClosureId::A3Bar,
                                                    ClosureId::A5Bar};

inline bool in_closure(const Eisenstein& z, ClosureId c) {
    switch (c) {
        case ClosureId::A1Bar: return z.a >= 1 && z.b <= 0;
        case ClosureId::A3Bar: return z.a <= z.b && z.b <= 0;
        case ClosureId::A5Bar: return 1 <= z.a && z.a <= z.b;
    }
    return false;
}

// The three closures are pairwise disjoint, so a point lies in at most one.
inline std::optional<ClosureId> closure_of(const Eisenstein& z) {
    for (ClosureId c : kClosures)
        if (in_closure(z, c)) return c;
    return std::nullopt;
}

inline const char* to_string(ClosureId c) {
    switch (c) {
        case ClosureId::A1Bar: return "A1bar";
        case ClosureId::A3Bar: return "A3bar";
        case ClosureId::A5Bar: return "A5bar";
    }
    return "?";
}

// Which labels make up each closure (the union view; the predicate view above
// is the O(1) implementation, the two are checked against each other in tests).
inline bool label_in_closure(RegionLabel r, ClosureId c) {
    switch (c) {
        case ClosureId::A1Bar:
            return r == RegionLabel::A1 || r == RegionLabel::B1 || r == RegionLabel::B5 ||
                   r == RegionLabel::P1;
        case ClosureId::A3Bar:
            return r == RegionLabel::A3 || r == RegionLabel::B3 || r == RegionLabel::B4 ||
                   r == RegionLabel::P0;
        case ClosureId::A5Bar:
            return r == RegionLabel::A5 || r == RegionLabel::B2 || r == RegionLabel::B6 ||
                   r == RegionLabel::P1Z;
    }
    return false;
}

// Tanaka weight on the closed sectors: 1 on A1bar, zeta on A3bar,
// zeta^2 on A5bar, 0 elsewhere.
inline Eisenstein phi(const Eisenstein& z) {
    if (in_closure(z, ClosureId::A1Bar)) return kOne;
    if (in_closure(z, ClosureId::A3Bar)) return kZeta;
    if (in_closure(z, ClosureId::A5Bar)) return kZetaSq;
    return kZero;
}

// Tanaka weight on the open sectors left uncovered by the closures:
// 1 on A6, zeta on A4, zeta^2 on A2, 0 elsewhere. Exactly one of phi, psi
// is nonzero at every lattice point.
inline Eisenstein psi(const Eisenstein& z) {
    switch (classify(z)) {
        case RegionLabel::A6: return kOne;
        case RegionLabel::A4: return kZeta;
        case RegionLabel::A2: return kZetaSq;
        default: return kZero;
    }
}

}  // namespace pwalk
