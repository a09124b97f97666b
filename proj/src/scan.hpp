#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "pwalk/parallel.hpp"
#include "pwalk/report.hpp"

// Internal driver shared by the ball/path scan kernels. The serial branch is
// the reference implementation; the OpenMP branch must be observationally
// identical: violations come back sorted by scan index no matter how the
// iteration space was partitioned.

namespace pwalk::detail {

inline constexpr std::size_t kViolationCap = 256;

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

template <class Check>
std::vector<Violation> scan_collect(std::int64_t count, Exec exec, Check&& check) {
    using Tagged = std::pair<std::int64_t, Violation>;
    std::vector<Tagged> tagged;

    auto run_one = [&check](std::int64_t i, std::vector<Tagged>& sink) {
        auto emit = [&sink, i](Violation v) { sink.emplace_back(i, std::move(v)); };
        try {
            check(i, emit);
        } catch (const std::exception& e) {
            sink.emplace_back(
                i, Violation{"scan index " + std::to_string(i), "no exception", e.what()});
        }
    };

#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        const int workers = effective_workers();
#pragma omp parallel num_threads(workers)
        {
            std::vector<Tagged> local;
#pragma omp for schedule(static) nowait
            for (std::int64_t i = 0; i < count; ++i) run_one(i, local);
#pragma omp critical
            tagged.insert(tagged.end(), local.begin(), local.end());
        }
    } else
#else
    (void)exec;
#endif
    {
        for (std::int64_t i = 0; i < count; ++i) run_one(i, tagged);
    }

    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const Tagged& x, const Tagged& y) { return x.first < y.first; });
    if (tagged.size() > kViolationCap) tagged.resize(kViolationCap);

    std::vector<Violation> out;
    out.reserve(tagged.size());
    for (Tagged& t : tagged) out.push_back(std::move(t.second));
    return out;
}

// Row-major index <-> lattice point for square ball scans |a|,|b| <= radius.
inline std::int64_t ball_site_count(std::int64_t radius) {
    const std::int64_t w = 2 * radius + 1;
    return w * w;
}

inline Eisenstein ball_site(std::int64_t radius, std::int64_t index) {
    const std::int64_t w = 2 * radius + 1;
    return {index / w - radius, index % w - radius};
}

}  // namespace pwalk::detail
