#pragma once

#include <cstdint>
#include <vector>

#include "pwalk/eisenstein.hpp"
#include "pwalk/regions.hpp"

// Walk paths, the exit-count local time, and the radial process
// X_t = ||Z_t|| - L_t.

namespace pwalk {

struct WalkPath {
    Eisenstein start{};
    std::vector<Step> steps;
    std::vector<Eisenstein> positions;  // positions[t] = Z_t, size steps.size() + 1

    std::int64_t horizon() const { return static_cast<std::int64_t>(steps.size()); }
};

// Build the position sequence from a step sequence.
WalkPath make_path(const Eisenstein& start, std::vector<Step> steps);

// Deterministic path from the counter-based generator: step t of trial
// `stream` is step_at(seed, stream, t).
WalkPath simulate(const Eisenstein& start, std::int64_t n_steps, std::uint64_t seed,
                  std::uint64_t stream = 0);

// Running exit counts from the three closed sectors. L is derived so the
// defining identity cannot be violated by construction.
struct LocalTimeLedger {
    std::int64_t l1 = 0;
    std::int64_t l3 = 0;
    std::int64_t l5 = 0;

    std::int64_t L() const { return l1 + l3 + l5; }

    friend bool operator==(const LocalTimeLedger&, const LocalTimeLedger&) = default;
};

// 1 if the step from z exits the (unique) closed sector containing z.
inline int exit_indicator(const Eisenstein& z, Step s) {
    const auto c = closure_of(z);
    return c && !in_closure(z + step_vector(s), *c) ? 1 : 0;
}

// Ledger at every time 0..T: entry t counts exits at times u < t.
std::vector<LocalTimeLedger> local_time(const WalkPath& path);

struct RadialProcess {
    std::vector<std::int64_t> values;  // X_t = ||Z_t|| - L_t
};

RadialProcess radial(const WalkPath& path);

// All 3^T step sequences from a common start, in lexicographic order with
// respect to (1, zeta, zeta^2). Random access by index so scans can be
// partitioned arbitrarily.
class PathEnumeration {
  public:
    // Throws std::invalid_argument ("enumeration cap") if T > 13.
    PathEnumeration(const Eisenstein& start, int horizon);

    std::int64_t size() const { return size_; }
    int horizon() const { return horizon_; }
    const Eisenstein& start() const { return start_; }

    // Step sequence number `index` (big-endian base-3 digits of index).
    std::vector<Step> steps(std::int64_t index) const;
    WalkPath path(std::int64_t index) const;

  private:
    Eisenstein start_;
    int horizon_;
    std::int64_t size_;
};

// Exact law of X_T - X_0 for a simple walk: increments uniform on
// {-1, 0, +1}. count(k) is the number of the 3^T increment sequences
// summing to k.
struct SimpleWalkLaw {
    std::int64_t horizon = 0;
    std::vector<std::uint64_t> counts;  // index i holds k = i - horizon

    std::uint64_t count(std::int64_t k) const {
        const std::int64_t i = k + horizon;
        if (i < 0 || i >= static_cast<std::int64_t>(counts.size())) return 0;
        return counts[static_cast<std::size_t>(i)];
    }
    double probability(std::int64_t k) const;
};

// Trinomial convolution with exact uint64 counts; the total 3^T must fit,
// so T <= 40. Throws std::invalid_argument beyond the cap.
SimpleWalkLaw simple_walk_law(std::int64_t T);

// Same law in double precision for horizons past the exact cap. Entry i
// holds P(X_T - X_0 = i - T).
std::vector<double> simple_walk_pmf(std::int64_t T);

}  // namespace pwalk
