#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

// Exact arithmetic on the ring Z[zeta], zeta = (-1 + sqrt(-3))/2, the
// coordinate system for everything else in this library. A point a + b*zeta
// is stored as the integer pair (a, b); the ring relation is zeta^2 = -1 - zeta.

namespace pwalk {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("int64 add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("int64 sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("int64 mul overflow");
    return r;
}

inline std::int64_t checked_neg(std::int64_t x) {
    if (x == INT64_MIN) throw std::overflow_error("int64 negate overflow");
    return -x;
}

struct Eisenstein {
    std::int64_t a = 0;  // coefficient of 1
    std::int64_t b = 0;  // coefficient of zeta

    constexpr Eisenstein() = default;
    constexpr Eisenstein(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    friend constexpr bool operator==(const Eisenstein&, const Eisenstein&) = default;
};

inline constexpr Eisenstein kZero{0, 0};
inline constexpr Eisenstein kOne{1, 0};
inline constexpr Eisenstein kZeta{0, 1};
inline constexpr Eisenstein kZetaSq{-1, -1};  // zeta^2 = -1 - zeta

inline Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

inline Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

inline Eisenstein operator-(const Eisenstein& x) {
    return {checked_neg(x.a), checked_neg(x.b)};
}

// (a1 + b1 z)(a2 + b2 z) = a1 a2 - b1 b2 + (a1 b2 + a2 b1 - b1 b2) z
inline Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    const std::int64_t re = checked_sub(checked_mul(x.a, y.a), checked_mul(x.b, y.b));
    const std::int64_t im =
        checked_sub(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), checked_mul(x.b, y.b));
    return {re, im};
}

inline Eisenstein operator*(std::int64_t k, const Eisenstein& x) {
    return {checked_mul(k, x.a), checked_mul(k, x.b)};
}

// conj(a + b zeta) = (a - b) - b zeta, since conj(zeta) = zeta^2
inline Eisenstein conj(const Eisenstein& x) {
    return {checked_sub(x.a, x.b), checked_neg(x.b)};
}

// |a + b zeta|^2 = a^2 - a b + b^2 (always a nonnegative integer)
inline std::int64_t abs_sq(const Eisenstein& x) {
    return checked_add(checked_sub(checked_mul(x.a, x.a), checked_mul(x.a, x.b)),
                       checked_mul(x.b, x.b));
}

// Planar embedding (a - b/2, b*sqrt(3)/2). The only place doubles appear in
// the ring layer; everything identity-bearing stays in integers.
inline std::pair<double, double> to_cartesian(const Eisenstein& x) {
    const double sqrt3_half = 0.8660254037844386467637231707529362;
    return {static_cast<double>(x.a) - static_cast<double>(x.b) / 2.0,
            static_cast<double>(x.b) * sqrt3_half};
}

inline std::string to_string(const Eisenstein& x) {
    return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

// The three admissible walk increments {1, zeta, zeta^2}.
enum class Step : std::uint8_t { One = 0, Zeta = 1, ZetaSq = 2 };

inline constexpr std::array<Step, 3> kSteps{Step::One, Step::Zeta, Step::ZetaSq};

inline constexpr Eisenstein step_vector(Step s) {
    switch (s) {
        case Step::One: return kOne;
        case Step::Zeta: return kZeta;
        case Step::ZetaSq: return kZetaSq;
    }
    return kZero;  // unreachable
}

inline constexpr Step conj_step(Step s) {
    switch (s) {
        case Step::One: return Step::One;
        case Step::Zeta: return Step::ZetaSq;
        case Step::ZetaSq: return Step::Zeta;
    }
    return Step::One;  // unreachable
}

inline const char* to_string(Step s) {
    switch (s) {
        case Step::One: return "1";
        case Step::Zeta: return "zeta";
        case Step::ZetaSq: return "zeta^2";
    }
    return "?";
}

}  // namespace pwalk
