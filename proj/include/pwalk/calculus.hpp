#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pwalk/eisenstein.hpp"
#include "pwalk/parallel.hpp"
#include "pwalk/rational.hpp"
#include "pwalk/regions.hpp"
#include "pwalk/report.hpp"
#include "pwalk/walk.hpp"

// The pathwise Ito decomposition, the derivative/Laplacian operators built
// from it, and the Tanaka identity for the norm. Every check here compares
// exact values; there is no tolerance anywhere in this header.

namespace pwalk {

// A complex-valued lattice function materialized as a table over the square
// |a|, |b| <= radius. Values live in (1/3^k) Z[zeta]. Evaluation outside the
// radius throws std::out_of_range -- never a silent default.
class LatticeFunction {
  public:
    using Generator = std::function<EisensteinQ3(const Eisenstein&)>;

    static LatticeFunction from_generator(std::string name, std::int64_t radius, Generator gen);
    static LatticeFunction from_values(std::string name, std::int64_t radius,
                                       std::vector<EisensteinQ3> values);

    const EisensteinQ3& operator()(const Eisenstein& z) const;

    const std::string& name() const { return name_; }
    std::int64_t radius() const { return radius_; }

  private:
    LatticeFunction() = default;

    std::string name_;
    std::int64_t radius_ = 0;
    std::vector<EisensteinQ3> values_;  // row-major over the square
};

// Stock functions used throughout the tests and the CLI.
LatticeFunction norm_function(std::int64_t radius);           // w -> ||w||
LatticeFunction coordinate_a_function(std::int64_t radius);   // w = a + b zeta -> a
LatticeFunction coordinate_b_function(std::int64_t radius);   // w -> b
LatticeFunction identity_function(std::int64_t radius);       // w -> w
LatticeFunction conjugate_function(std::int64_t radius);      // w -> conj(w)
// Seeded values in (1/3) Z[zeta] with coordinates in [-9, 9].
LatticeFunction random_lattice_function(std::int64_t radius, std::uint64_t seed);

// The unique predictable coefficients with
//   f(z+s) - f(z) = alpha s + beta conj(s) + gamma  for s in {1, zeta, zeta^2}.
struct ItoCoefficients {
    EisensteinQ3 alpha;
    EisensteinQ3 beta;
    EisensteinQ3 gamma;

    friend bool operator==(const ItoCoefficients&, const ItoCoefficients&) = default;
};

ItoCoefficients ito_coefficients(const LatticeFunction& f, const Eisenstein& z);

// Df = (1/3) sum_j zeta^j f(z + zeta^j); equals beta above.
EisensteinQ3 discrete_derivative(const LatticeFunction& f, const Eisenstein& z);

// Lf = (1/3) sum_j (f(z + zeta^j) - f(z)); equals gamma above.
EisensteinQ3 discrete_laplacian(const LatticeFunction& f, const Eisenstein& z);

// Check f(Z_{t+1}) - f(Z_t) = alpha dZ + beta conj(dZ) + gamma at every step.
VerificationReport ito_identity_check(const LatticeFunction& f, const WalkPath& path);

// Same identity over every path of the enumeration, scan partitioned by path.
VerificationReport ito_path_scan(const LatticeFunction& f, const PathEnumeration& paths,
                                 Exec exec = Exec::Parallel);

// For real-valued f the decomposition collapses to
//   f(z+s) - f(z) = 2 Re(Df) Re(s) + 2 Im(Df) Im(s) + Lf,
// checked in Q(sqrt 3) arithmetic. (The factor 2 comes from
// alpha s + conj(alpha s) = 2 Re(alpha s) with beta = conj(alpha).)
VerificationReport real_ito_identity_check(const LatticeFunction& f, const WalkPath& path);

// (2/3) Re((1 - zeta^2) w) for w = x + y zeta is exactly x - y.
inline std::int64_t tanaka_projection(const Eisenstein& w) { return checked_sub(w.a, w.b); }

struct TanakaIncrement {
    std::int64_t mart = 0;  // (2/3) Re((1-zeta^2)(phi(z) s + psi(z) conj(s)))
    std::int64_t dL = 0;    // exit indicator, 0 or 1

    friend bool operator==(const TanakaIncrement&, const TanakaIncrement&) = default;
};

// The two sides of ||z+s|| - ||z|| = mart + dL at a single site and step.
inline TanakaIncrement tanaka_increment(const Eisenstein& z, Step s) {
    const Eisenstein sv = step_vector(s);
    const Eisenstein w = phi(z) * sv + psi(z) * conj(sv);
    return {tanaka_projection(w), exit_indicator(z, s)};
}

// Pathwise check of the identity at every step, with the dL side
// cross-checked against the local-time ledger.
VerificationReport tanaka_identity_check(const WalkPath& path);

// The same identity at every site of the square ball and every step, with
// caller-supplied weights (tests pass deliberately broken ones).
VerificationReport tanaka_site_scan_with(std::int64_t radius,
                                         Eisenstein (*phi_fn)(const Eisenstein&),
                                         Eisenstein (*psi_fn)(const Eisenstein&), Exec exec);

VerificationReport tanaka_site_scan(std::int64_t radius, Exec exec = Exec::Parallel);

// All 3^T paths of the enumeration through tanaka_identity_check.
VerificationReport tanaka_path_scan(const PathEnumeration& paths, Exec exec = Exec::Parallel);

}  // namespace pwalk
