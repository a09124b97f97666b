#include "pwalk/harness.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwalk/distance.hpp"
#include "pwalk/rng.hpp"
#include "pwalk/stats.hpp"
#include "pwalk/walk.hpp"
#include "scan.hpp"

namespace pwalk {
namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Final state of one streamed trial: radial increment and displacement.
struct TrialEnd {
    std::int64_t d = 0;  // X_T - X_0
    Eisenstein disp{};   // Z_T - Z_0
};

TrialEnd run_trial(const Eisenstein& start, std::int64_t steps, std::uint64_t seed,
                   std::uint64_t trial) {
    Eisenstein z = start;
    std::int64_t exits = 0;
    for (std::int64_t t = 0; t < steps; ++t) {
        const Step s = step_at(seed, trial, static_cast<std::uint64_t>(t));
        exits += exit_indicator(z, s);
        z = z + step_vector(s);
    }
    return {norm(z) - exits - norm(start), z - start};
}

}  // namespace

VerificationReport per_site_bijection_check(std::int64_t radius, Exec exec) {
    detail::Stopwatch clock;
    if (radius < 2) throw std::invalid_argument("per-site check needs radius >= 2");
    VerificationReport report;
    report.name = "per-site radial bijection, radius " + std::to_string(radius);
    const std::int64_t sites = detail::ball_site_count(radius);
    report.checked = sites;
    report.violations = detail::scan_collect(sites, exec, [radius](std::int64_t i, auto emit) {
        const Eisenstein z = detail::ball_site(radius, i);
        const std::int64_t n0 = norm(z);
        bool seen[3] = {false, false, false};
        std::int64_t inc[3] = {0, 0, 0};
        bool in_range = true;
        for (Step s : kSteps) {
            const std::int64_t v =
                norm(z + step_vector(s)) - n0 - exit_indicator(z, s);
            inc[static_cast<int>(s)] = v;
            if (v < -1 || v > 1)
                in_range = false;
            else
                seen[v + 1] = true;
        }
        if (!in_range || !seen[0] || !seen[1] || !seen[2])
            emit(Violation{"z=" + to_string(z), "increments {-1, 0, +1}",
                           "(" + std::to_string(inc[0]) + "," + std::to_string(inc[1]) + "," +
                               std::to_string(inc[2]) + ")"});
    });
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport exhaustive_theorem_check(const Eisenstein& start, int T, Exec exec) {
    detail::Stopwatch clock;
    if (T < 1 || T > 12)
        throw std::invalid_argument("theorem check cap: T must be in [1, 12], got " +
                                    std::to_string(T));
    VerificationReport report;
    report.name = "radial law bijection, T=" + std::to_string(T) + " from " + to_string(start);
    const PathEnumeration paths(start, T);
    const std::int64_t n = paths.size();
    report.checked = n;

    // Phase 1: each path's radial increment sequence, encoded base 3
    // (digit = increment + 1). -1 marks an out-of-range increment,
    // -2 an exception; slots are disjoint, so any partitioning works.
    std::vector<std::int32_t> codes(static_cast<std::size_t>(n), 0);
    auto encode = [&paths, T, &codes](std::int64_t i) {
        try {
            const WalkPath path = paths.path(i);
            const RadialProcess x = radial(path);
            std::int32_t code = 0;
            for (int t = 0; t < T; ++t) {
                const std::int64_t inc = x.values[static_cast<std::size_t>(t) + 1] -
                                         x.values[static_cast<std::size_t>(t)];
                if (inc < -1 || inc > 1) {
                    code = -1;
                    break;
                }
                code = code * 3 + static_cast<std::int32_t>(inc + 1);
            }
            codes[static_cast<std::size_t>(i)] = code;
        } catch (...) {
            codes[static_cast<std::size_t>(i)] = -2;
        }
    };
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        const int workers = effective_workers();
#pragma omp parallel for schedule(static) num_threads(workers)
        for (std::int64_t i = 0; i < n; ++i) encode(i);
    } else
#endif
    {
        for (std::int64_t i = 0; i < n; ++i) encode(i);
    }

    // Phase 2 (serial): the code multiset must be exactly {0, ..., 3^T - 1}.
    std::vector<std::int64_t> first_owner(static_cast<std::size_t>(n), -1);
    for (std::int64_t i = 0; i < n && report.violations.size() < detail::kViolationCap; ++i) {
        const std::int32_t code = codes[static_cast<std::size_t>(i)];
        if (code == -1) {
            report.violations.push_back(Violation{"path " + std::to_string(i),
                                                  "increments in {-1, 0, +1}", "out of range"});
            continue;
        }
        if (code == -2) {
            report.violations.push_back(
                Violation{"path " + std::to_string(i), "no exception", "exception"});
            continue;
        }
        std::int64_t& owner = first_owner[static_cast<std::size_t>(code)];
        if (owner >= 0)
            report.violations.push_back(Violation{
                "path " + std::to_string(i), "a fresh increment sequence",
                "sequence code " + std::to_string(code) + " already produced by path " +
                    std::to_string(owner)});
        else
            owner = i;
    }
    for (std::int64_t code = 0;
         code < n && report.violations.size() < detail::kViolationCap; ++code)
        if (first_owner[static_cast<std::size_t>(code)] < 0)
            report.violations.push_back(Violation{"sequence code " + std::to_string(code),
                                                  "produced by exactly one path", "never produced"});
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport monte_carlo_check(const RunConfig& cfg, Exec exec) {
    detail::Stopwatch clock;
    if (cfg.trials < 1000) throw std::invalid_argument("monte carlo needs trials >= 1000");
    if (cfg.steps < 1) throw std::invalid_argument("monte carlo needs steps >= 1");
    VerificationReport report;
    const std::int64_t T = cfg.steps;
    const std::int64_t m = cfg.trials;
    report.name = "monte carlo radial law, " + std::to_string(m) + " trials of " +
                  std::to_string(T) + " steps";
    report.checked = m;

    // Integer accumulators only, so the merged totals cannot depend on the
    // worker count or summation order.
    std::vector<std::int64_t> hist(static_cast<std::size_t>(2 * T + 1), 0);
    std::int64_t sum_d = 0;
    std::int64_t sum_d2 = 0;
    auto accumulate = [&](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& h,
                          std::int64_t& sd, std::int64_t& sd2) {
        for (std::int64_t tr = lo; tr < hi; ++tr) {
            const TrialEnd end =
                run_trial(cfg.start, T, cfg.seed, static_cast<std::uint64_t>(tr));
            h[static_cast<std::size_t>(end.d + T)] += 1;
            sd += end.d;
            sd2 += end.d * end.d;
        }
    };
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        const int workers = effective_workers();
#pragma omp parallel num_threads(workers)
        {
            std::vector<std::int64_t> h(hist.size(), 0);
            std::int64_t sd = 0, sd2 = 0;
            const int w = omp_get_num_threads();
            const int me = omp_get_thread_num();
            const std::int64_t lo = m * me / w;
            const std::int64_t hi = m * (me + 1) / w;
            accumulate(lo, hi, h, sd, sd2);
#pragma omp critical
            {
                for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += h[k];
                sum_d += sd;
                sum_d2 += sd2;
            }
        }
    } else
#endif
    {
        accumulate(0, m, hist, sum_d, sum_d2);
    }

    const double n = static_cast<double>(m);
    const double var_theory = 2.0 * static_cast<double>(T) / 3.0;
    const double mean = static_cast<double>(sum_d) / n;
    const double mean_bound = cfg.mean_sigmas * std::sqrt(var_theory / n);
    if (std::abs(mean) > mean_bound)
        report.violations.push_back(
            Violation{"sample mean", "|mean| <= " + fmt(mean_bound), fmt(mean)});

    const double var =
        (static_cast<double>(sum_d2) - n * mean * mean) / (n - 1.0);
    if (std::abs(var - var_theory) > cfg.variance_tol * var_theory)
        report.violations.push_back(Violation{
            "sample variance", fmt(var_theory) + " within " + fmt(100 * cfg.variance_tol) + "%",
            fmt(var)});

    std::vector<double> expected(hist.size());
    if (T <= 40) {
        const SimpleWalkLaw law = simple_walk_law(T);
        for (std::size_t k = 0; k < hist.size(); ++k)
            expected[k] = n * law.probability(static_cast<std::int64_t>(k) - T);
    } else {
        const std::vector<double> pmf = simple_walk_pmf(T);
        for (std::size_t k = 0; k < hist.size(); ++k) expected[k] = n * pmf[k];
    }
    const ChiSquareResult gof = chi_square_gof(hist, expected);
    if (gof.p_value <= cfg.p_threshold)
        report.violations.push_back(Violation{
            "chi-square vs trinomial law (chi2=" + fmt(gof.chi2) + ", dof=" +
                std::to_string(gof.dof) + ")",
            "p > " + fmt(cfg.p_threshold), "p = " + fmt(gof.p_value)});
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport scaling_probe(const RunConfig& cfg, Exec exec) {
    detail::Stopwatch clock;
    if (cfg.steps < 10000) throw std::invalid_argument("scaling probe needs steps >= 10000");
    if (cfg.trials < 100) throw std::invalid_argument("scaling probe needs trials >= 100");
    VerificationReport report;
    const std::int64_t n_steps = cfg.steps;
    const std::int64_t m = cfg.trials;
    report.name = "scaling probe, " + std::to_string(m) + " trials of " +
                  std::to_string(n_steps) + " steps";
    report.checked = m;

    // Each trial writes only its own slot; the component sums are integers.
    std::vector<std::int64_t> finals(static_cast<std::size_t>(m), 0);
    std::int64_t su = 0, su2 = 0, sb = 0, sb2 = 0, sub = 0;
    auto accumulate = [&](std::int64_t lo, std::int64_t hi, std::int64_t& u, std::int64_t& u2,
                          std::int64_t& b, std::int64_t& b2, std::int64_t& ub) {
        for (std::int64_t tr = lo; tr < hi; ++tr) {
            const TrialEnd end =
                run_trial(cfg.start, n_steps, cfg.seed, static_cast<std::uint64_t>(tr));
            finals[static_cast<std::size_t>(tr)] = end.d;
            // Doubled cartesian coordinates: 2x = 2a - b, 2y = b sqrt(3).
            const std::int64_t du = 2 * end.disp.a - end.disp.b;
            u += du;
            u2 += du * du;
            b += end.disp.b;
            b2 += end.disp.b * end.disp.b;
            ub += du * end.disp.b;
        }
    };
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        const int workers = effective_workers();
#pragma omp parallel num_threads(workers)
        {
            std::int64_t u = 0, u2 = 0, b = 0, b2 = 0, ub = 0;
            const int w = omp_get_num_threads();
            const int me = omp_get_thread_num();
            accumulate(m * me / w, m * (me + 1) / w, u, u2, b, b2, ub);
#pragma omp critical
            {
                su += u;
                su2 += u2;
                sb += b;
                sb2 += b2;
                sub += ub;
            }
        }
    } else
#endif
    {
        accumulate(0, m, su, su2, sb, sb2, sub);
    }

    // KS of X_n normalized by the simple-walk standard deviation sqrt(2n/3).
    const double sd = std::sqrt(2.0 * static_cast<double>(n_steps) / 3.0);
    std::vector<double> normalized(finals.size());
    for (std::size_t i = 0; i < finals.size(); ++i)
        normalized[i] = static_cast<double>(finals[i]) / sd;
    const KsResult ks = ks_test_normal(std::move(normalized));
    if (ks.p_value <= cfg.p_threshold)
        report.violations.push_back(
            Violation{"KS of X_n/sqrt(2n/3) vs standard normal (D=" + fmt(ks.statistic) + ")",
                      "p > " + fmt(cfg.p_threshold), "p = " + fmt(ks.p_value)});

    // Isotropy of Z_n/sqrt(n) in cartesian coordinates x = (2a-b)/2,
    // y = b sqrt(3)/2. The 1/n normalization cancels in both checks.
    const double dm = static_cast<double>(m);
    const double mu_u = static_cast<double>(su) / dm;
    const double mu_b = static_cast<double>(sb) / dm;
    const double var_x = (static_cast<double>(su2) / dm - mu_u * mu_u) / 4.0;
    const double var_y = 3.0 * (static_cast<double>(sb2) / dm - mu_b * mu_b) / 4.0;
    const double cov_xy =
        std::sqrt(3.0) / 4.0 * (static_cast<double>(sub) / dm - mu_u * mu_b);
    if (std::abs(var_x / var_y - 1.0) > cfg.isotropy_tol)
        report.violations.push_back(Violation{
            "component variance ratio of Z_n/sqrt(n)",
            "within " + fmt(100 * cfg.isotropy_tol) + "% of 1", fmt(var_x / var_y)});
    const double corr = cov_xy / std::sqrt(var_x * var_y);
    if (std::abs(corr) > cfg.correlation_tol)
        report.violations.push_back(Violation{"component correlation of Z_n/sqrt(n)",
                                              "|corr| <= " + fmt(cfg.correlation_tol),
                                              fmt(corr)});
    report.elapsed_ms = clock.ms();
    return report;
}

}  // namespace pwalk
