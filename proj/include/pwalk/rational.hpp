#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pwalk/eisenstein.hpp"

// Exact scalar types used by the calculus and representation layers. All
// identity checks in this library compare these values exactly; no tolerance
// ever enters.
//
//   EisensteinQ3  complex values of the form (a + b zeta) / 3^k
//   Rat3          real values of the form n / 3^k
//   Rational      general int64 fractions (cartesian components need /2)
//   Sqrt3Ext      exact elements u + v*sqrt(3) with rational u, v

namespace pwalk {

inline std::int64_t pow3_i64(int k) {
    if (k < 0 || k > 39) throw std::invalid_argument("pow3_i64: exponent out of range");
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, 3);
    return r;
}

struct EisensteinQ3 {
    Eisenstein num{};
    int pow3 = 0;  // value = num / 3^pow3; canonical: pow3 == 0 or 3 does not divide num

    EisensteinQ3() = default;
    EisensteinQ3(Eisenstein n, int p) : num(n), pow3(p) {
        if (p < 0) throw std::invalid_argument("EisensteinQ3: negative denominator exponent");
        normalize();
    }
    explicit EisensteinQ3(Eisenstein n) : num(n), pow3(0) {}

    void normalize() {
        if (num == kZero) {
            pow3 = 0;
            return;
        }
        while (pow3 > 0 && num.a % 3 == 0 && num.b % 3 == 0) {
            num.a /= 3;
            num.b /= 3;
            --pow3;
        }
    }

    bool is_zero() const { return num == kZero; }

    friend bool operator==(const EisensteinQ3&, const EisensteinQ3&) = default;
};

inline EisensteinQ3 operator+(const EisensteinQ3& x, const EisensteinQ3& y) {
    const int p = x.pow3 > y.pow3 ? x.pow3 : y.pow3;
    const Eisenstein xn = pow3_i64(p - x.pow3) * x.num;
    const Eisenstein yn = pow3_i64(p - y.pow3) * y.num;
    return {xn + yn, p};
}

inline EisensteinQ3 operator-(const EisensteinQ3& x) { return {-x.num, x.pow3}; }

inline EisensteinQ3 operator-(const EisensteinQ3& x, const EisensteinQ3& y) { return x + (-y); }

inline EisensteinQ3 operator*(const EisensteinQ3& x, const EisensteinQ3& y) {
    return {x.num * y.num, x.pow3 + y.pow3};
}

inline EisensteinQ3 operator*(const Eisenstein& x, const EisensteinQ3& y) {
    return {x * y.num, y.pow3};
}

inline EisensteinQ3 conj(const EisensteinQ3& x) { return {conj(x.num), x.pow3}; }

// value / 3, still exact
inline EisensteinQ3 div3(const EisensteinQ3& x) { return {x.num, x.pow3 + 1}; }

inline std::string to_string(const EisensteinQ3& x) {
    if (x.pow3 == 0) return to_string(x.num);
    return to_string(x.num) + "/3^" + std::to_string(x.pow3);
}

struct Rat3 {
    std::int64_t num = 0;
    int pow3 = 0;  // value = num / 3^pow3

    Rat3() = default;
    Rat3(std::int64_t n, int p) : num(n), pow3(p) {
        if (p < 0) throw std::invalid_argument("Rat3: negative denominator exponent");
        normalize();
    }

    void normalize() {
        if (num == 0) {
            pow3 = 0;
            return;
        }
        while (pow3 > 0 && num % 3 == 0) {
            num /= 3;
            --pow3;
        }
    }

    friend bool operator==(const Rat3&, const Rat3&) = default;
};

inline Rat3 operator+(const Rat3& x, const Rat3& y) {
    const int p = x.pow3 > y.pow3 ? x.pow3 : y.pow3;
    return {checked_add(checked_mul(x.num, pow3_i64(p - x.pow3)),
                        checked_mul(y.num, pow3_i64(p - y.pow3))),
            p};
}

// |num|^2 / 3^(2k) for a complex value num / 3^k
inline Rat3 abs_sq(const EisensteinQ3& x) { return {abs_sq(x.num), 2 * x.pow3}; }

inline std::string to_string(const Rat3& x) {
    if (x.pow3 == 0) return std::to_string(x.num);
    return std::to_string(x.num) + "/3^" + std::to_string(x.pow3);
}

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // canonical: den > 0, gcd(|num|, den) == 1

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }
    explicit Rational(std::int64_t n) : num(n), den(1) {}

    void normalize() {
        if (den < 0) {
            num = checked_neg(num);
            den = checked_neg(den);
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational operator+(const Rational& x, const Rational& y) {
    return {checked_add(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
            checked_mul(x.den, y.den)};
}

inline Rational operator-(const Rational& x) { return {checked_neg(x.num), x.den}; }

inline Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

inline Rational operator*(const Rational& x, const Rational& y) {
    return {checked_mul(x.num, y.num), checked_mul(x.den, y.den)};
}

inline std::string to_string(const Rational& x) {
    if (x.den == 1) return std::to_string(x.num);
    return std::to_string(x.num) + "/" + std::to_string(x.den);
}

// u + v*sqrt(3), closed under ring operations since (sqrt 3)^2 = 3
struct Sqrt3Ext {
    Rational u{};
    Rational v{};

    friend bool operator==(const Sqrt3Ext&, const Sqrt3Ext&) = default;
};

inline Sqrt3Ext operator+(const Sqrt3Ext& x, const Sqrt3Ext& y) {
    return {x.u + y.u, x.v + y.v};
}

inline Sqrt3Ext operator-(const Sqrt3Ext& x, const Sqrt3Ext& y) {
    return {x.u - y.u, x.v - y.v};
}

inline Sqrt3Ext operator*(const Sqrt3Ext& x, const Sqrt3Ext& y) {
    return {x.u * y.u + Rational(3) * (x.v * y.v), x.u * y.v + x.v * y.u};
}

// Exact cartesian parts of (a + b zeta) / 3^k under zeta = (-1 + i sqrt 3)/2:
//   Re = (2a - b) / (2 * 3^k)          (no sqrt-3 part)
//   Im = (b / (2 * 3^k)) * sqrt(3)     (pure sqrt-3 part)
inline Sqrt3Ext cartesian_re(const EisensteinQ3& z) {
    const std::int64_t d = checked_mul(2, pow3_i64(z.pow3));
    return {Rational(checked_sub(checked_mul(2, z.num.a), z.num.b), d), Rational(0)};
}

inline Sqrt3Ext cartesian_im(const EisensteinQ3& z) {
    const std::int64_t d = checked_mul(2, pow3_i64(z.pow3));
    return {Rational(0), Rational(z.num.b, d)};
}

}  // namespace pwalk
