#pragma once

#include <cstdint>
#include <string>

#include "pwalk/eisenstein.hpp"
#include "pwalk/parallel.hpp"
#include "pwalk/report.hpp"

// Theorem-level verification: the per-site sufficient condition, the
// exhaustive path bijection, and the two statistical experiments. The first
// two are exact; the statistical ones report threshold failures as
// violations, never as crashes.

namespace pwalk {

struct RunConfig {
    std::uint64_t seed = 1;
    std::int64_t trials = 100000;
    std::int64_t steps = 100;
    Eisenstein start{0, 0};
    std::int64_t radius = 60;

    // Loose defaults chosen to keep honest runs quiet while still catching
    // real defects; override per run.
    double p_threshold = 0.001;
    double variance_tol = 0.05;
    double mean_sigmas = 3.0;
    double isotropy_tol = 0.10;
    double correlation_tol = 0.05;
};

// At every z with |a|,|b| <= radius: the three steps map to radial
// increments (norm(z+s) - norm(z)) - dL(z, s) forming exactly {-1, 0, +1}.
// This pointwise bijection makes the radial increment conditionally uniform
// regardless of history -- a sufficient condition for the radial process
// being a simple walk, strictly stronger than the distributional statement.
VerificationReport per_site_bijection_check(std::int64_t radius, Exec exec = Exec::Parallel);

// Enumerate all 3^T paths from start: every radial increment lies in
// {-1, 0, +1} and path -> increment-sequence is a bijection onto
// {-1, 0, +1}^T, i.e. the law of the radial process is exactly the simple
// walk law. Cap T <= 12.
VerificationReport exhaustive_theorem_check(const Eisenstein& start, int T,
                                            Exec exec = Exec::Parallel);

// cfg.trials walks of cfg.steps steps: sample mean of X_T - X_0 within
// mean_sigmas standard errors of 0, sample variance within variance_tol of
// 2T/3, chi-square against the trinomial law above p_threshold.
VerificationReport monte_carlo_check(const RunConfig& cfg, Exec exec = Exec::Parallel);

// Statistical probe of the diffusive limit: KS of X_n/sqrt(2n/3) against a
// standard normal at p_threshold, plus isotropy of the cartesian components
// of Z_n/sqrt(n) (variance ratio within isotropy_tol, correlation within
// correlation_tol). Requires steps >= 10^4.
VerificationReport scaling_probe(const RunConfig& cfg, Exec exec = Exec::Parallel);

}  // namespace pwalk
