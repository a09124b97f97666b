#include "pwalk/walk.hpp"

#include <stdexcept>
#include <string>

#include "pwalk/distance.hpp"
#include "pwalk/rng.hpp"

namespace pwalk {

WalkPath make_path(const Eisenstein& start, std::vector<Step> steps) {
    WalkPath path;
    path.start = start;
    path.steps = std::move(steps);
    path.positions.reserve(path.steps.size() + 1);
    path.positions.push_back(start);
    for (Step s : path.steps) path.positions.push_back(path.positions.back() + step_vector(s));
    return path;
}

WalkPath simulate(const Eisenstein& start, std::int64_t n_steps, std::uint64_t seed,
                  std::uint64_t stream) {
    if (n_steps < 0) throw std::invalid_argument("simulate: negative step count");
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(n_steps));
    for (std::int64_t t = 0; t < n_steps; ++t)
        steps.push_back(step_at(seed, stream, static_cast<std::uint64_t>(t)));
    return make_path(start, std::move(steps));
}

std::vector<LocalTimeLedger> local_time(const WalkPath& path) {
    std::vector<LocalTimeLedger> ledgers;
    ledgers.reserve(path.steps.size() + 1);
    LocalTimeLedger cur;  // L_0 = 0: no exits happened before time 0
    ledgers.push_back(cur);
    for (std::size_t u = 0; u < path.steps.size(); ++u) {
        const Eisenstein& z = path.positions[u];
        if (const auto c = closure_of(z); c && !in_closure(path.positions[u + 1], *c)) {
            switch (*c) {
                case ClosureId::A1Bar: ++cur.l1; break;
                case ClosureId::A3Bar: ++cur.l3; break;
                case ClosureId::A5Bar: ++cur.l5; break;
            }
        }
        ledgers.push_back(cur);
    }
    return ledgers;
}

RadialProcess radial(const WalkPath& path) {
    const std::vector<LocalTimeLedger> ledgers = local_time(path);
    RadialProcess x;
    x.values.reserve(path.positions.size());
    for (std::size_t t = 0; t < path.positions.size(); ++t)
        x.values.push_back(norm(path.positions[t]) - ledgers[t].L());
    return x;
}

PathEnumeration::PathEnumeration(const Eisenstein& start, int horizon)
    : start_(start), horizon_(horizon) {
    if (horizon < 0 || horizon > 13)
        throw std::invalid_argument("enumeration cap: horizon must be in [0, 13], got " +
                                    std::to_string(horizon));
    size_ = 1;
    for (int i = 0; i < horizon; ++i) size_ *= 3;
}

std::vector<Step> PathEnumeration::steps(std::int64_t index) const {
    if (index < 0 || index >= size_)
        throw std::out_of_range("path index " + std::to_string(index) + " out of range");
    std::vector<Step> s(static_cast<std::size_t>(horizon_));
    for (int k = horizon_ - 1; k >= 0; --k) {
        s[static_cast<std::size_t>(k)] = static_cast<Step>(index % 3);
        index /= 3;
    }
    return s;
}

WalkPath PathEnumeration::path(std::int64_t index) const {
    return make_path(start_, steps(index));
}

double SimpleWalkLaw::probability(std::int64_t k) const {
    double total = 1.0;
    for (std::int64_t i = 0; i < horizon; ++i) total *= 3.0;
    return static_cast<double>(count(k)) / total;
}

SimpleWalkLaw simple_walk_law(std::int64_t T) {
    if (T < 0 || T > 40)
        throw std::invalid_argument("law cap: exact counts need horizon in [0, 40], got " +
                                    std::to_string(T));
    SimpleWalkLaw law;
    law.horizon = T;
    std::vector<std::uint64_t> counts{1};  // X_0 - X_0 = 0
    for (std::int64_t t = 1; t <= T; ++t) {
        std::vector<std::uint64_t> next(counts.size() + 2, 0);
        for (std::size_t i = 0; i < counts.size(); ++i) {
            next[i] += counts[i];
            next[i + 1] += counts[i];
            next[i + 2] += counts[i];
        }
        counts = std::move(next);
    }
    law.counts = std::move(counts);
    return law;
}

std::vector<double> simple_walk_pmf(std::int64_t T) {
    if (T < 0 || T > 1000000) throw std::invalid_argument("pmf horizon out of range");
    std::vector<double> pmf{1.0};
    for (std::int64_t t = 1; t <= T; ++t) {
        std::vector<double> next(pmf.size() + 2, 0.0);
        for (std::size_t i = 0; i < pmf.size(); ++i) {
            const double w = pmf[i] / 3.0;
            next[i] += w;
            next[i + 1] += w;
            next[i + 2] += w;
        }
        pmf = std::move(next);
    }
    return pmf;
}

}  // namespace pwalk
