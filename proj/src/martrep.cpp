#include "pwalk/martrep.hpp"

#include <stdexcept>
#include <utility>

#include "pwalk/distance.hpp"
#include "pwalk/rng.hpp"
#include "scan.hpp"

namespace pwalk {
namespace {

std::int64_t pow3(int t) {
    std::int64_t r = 1;
    for (int i = 0; i < t; ++i) r *= 3;
    return r;
}

// dZ_S for the path with the given step sequence, both addressed by index.
Eisenstein onb_by_index(int t, std::int64_t word_index, std::int64_t path_index) {
    Eisenstein prod = kOne;
    // Walk the digits from the least significant (letter t) down to letter 1.
    for (int i = 0; i < t; ++i) {
        const auto letter = static_cast<Step>(word_index % 3);
        const auto step = static_cast<Step>(path_index % 3);
        word_index /= 3;
        path_index /= 3;
        if (letter == Step::Zeta)
            prod = prod * step_vector(step);
        else if (letter == Step::ZetaSq)
            prod = prod * conj(step_vector(step));
    }
    return prod;
}

// All dZ_S(path) values for words and paths of length t, laid out
// word-major: table[S * 3^t + p].
std::vector<Eisenstein> onb_table(int t) {
    const std::int64_t n = pow3(t);
    std::vector<Eisenstein> table(static_cast<std::size_t>(n * n));
    for (std::int64_t s = 0; s < n; ++s)
        for (std::int64_t p = 0; p < n; ++p)
            table[static_cast<std::size_t>(s * n + p)] = onb_by_index(t, s, p);
    return table;
}

}  // namespace

SignatureWord signature_from_index(int t, std::int64_t index) {
    if (t < 0) throw std::invalid_argument("signature length must be nonnegative");
    SignatureWord word(static_cast<std::size_t>(t));
    for (int k = t - 1; k >= 0; --k) {
        word[static_cast<std::size_t>(k)] = static_cast<Step>(index % 3);
        index /= 3;
    }
    return word;
}

Eisenstein onb_element(const SignatureWord& S, const WalkPath& path) {
    if (path.steps.size() < S.size())
        throw std::invalid_argument("onb_element: path shorter than the word");
    Eisenstein prod = kOne;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const Eisenstein dz = step_vector(path.steps[i]);
        if (S[i] == Step::Zeta)
            prod = prod * dz;
        else if (S[i] == Step::ZetaSq)
            prod = prod * conj(dz);
    }
    return prod;
}

AdaptedFunctional::AdaptedFunctional(std::string name, const Eisenstein& start, int horizon,
                                     const std::function<EisensteinQ3(const WalkPath&)>& eval,
                                     bool martingale)
    : name_(std::move(name)), start_(start), horizon_(horizon), martingale_(martingale) {
    if (horizon < 0 || horizon > 8)
        throw std::invalid_argument("adapted functional horizon must be in [0, 8]");
    levels_.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int t = 0; t <= horizon; ++t) {
        const PathEnumeration prefixes(start, t);
        std::vector<EisensteinQ3> level;
        level.reserve(static_cast<std::size_t>(prefixes.size()));
        for (std::int64_t i = 0; i < prefixes.size(); ++i) level.push_back(eval(prefixes.path(i)));
        levels_.push_back(std::move(level));
    }
}

const EisensteinQ3& AdaptedFunctional::value(int t, std::int64_t prefix_index) const {
    if (t < 0 || t > horizon_) throw std::out_of_range("adapted functional: time out of range");
    const auto& level = levels_[static_cast<std::size_t>(t)];
    if (prefix_index < 0 || prefix_index >= static_cast<std::int64_t>(level.size()))
        throw std::out_of_range("adapted functional: prefix index out of range");
    return level[static_cast<std::size_t>(prefix_index)];
}

AdaptedFunctional adapted_z(const Eisenstein& start, int horizon) {
    return {"Z", start, horizon,
            [](const WalkPath& p) { return EisensteinQ3{p.positions.back()}; }, true};
}

AdaptedFunctional adapted_conj_z(const Eisenstein& start, int horizon) {
    return {"conj(Z)", start, horizon,
            [](const WalkPath& p) { return EisensteinQ3{conj(p.positions.back())}; }, true};
}

AdaptedFunctional adapted_radial(const Eisenstein& start, int horizon) {
    return {"radial", start, horizon,
            [](const WalkPath& p) {
                const RadialProcess x = radial(p);
                return EisensteinQ3{Eisenstein{x.values.back(), 0}};
            },
            true};
}

AdaptedFunctional adapted_random(const Eisenstein& start, int horizon, std::uint64_t seed) {
    return {"random" + std::to_string(seed), start, horizon,
            [seed](const WalkPath& p) {
                // Key the draw by (t, lexicographic prefix index).
                std::uint64_t index = 0;
                for (Step s : p.steps) index = index * 3 + static_cast<std::uint64_t>(s);
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(p.horizon()) << 32) ^ index;
                const auto a = static_cast<std::int64_t>(counter_draw(seed, 11, key) % 19) - 9;
                const auto b = static_cast<std::int64_t>(counter_draw(seed, 12, key) % 19) - 9;
                const int pw = static_cast<int>(counter_draw(seed, 13, key) % 2);
                return EisensteinQ3{Eisenstein{a, b}, pw};
            },
            false};
}

AdaptedFunctional adapted_time(const Eisenstein& start, int horizon) {
    return {"time", start, horizon,
            [](const WalkPath& p) { return EisensteinQ3{Eisenstein{p.horizon(), 0}}; }, false};
}

VerificationReport gram_check(int t, Exec exec) {
    detail::Stopwatch clock;
    if (t < 0 || t > 5) throw std::invalid_argument("gram cap: t must be in [0, 5]");
    VerificationReport report;
    report.name = "gram identity, words of length " + std::to_string(t);
    const std::int64_t n = pow3(t);
    report.checked = n * n;
    const std::vector<Eisenstein> table = onb_table(t);
    report.violations = detail::scan_collect(n * n, exec, [n, t, &table](std::int64_t pair,
                                                                         auto emit) {
        const std::int64_t s1 = pair / n;
        const std::int64_t s2 = pair % n;
        Eisenstein sum = kZero;
        for (std::int64_t p = 0; p < n; ++p)
            sum = sum + table[static_cast<std::size_t>(s1 * n + p)] *
                            conj(table[static_cast<std::size_t>(s2 * n + p)]);
        const Eisenstein expected = s1 == s2 ? Eisenstein{n, 0} : kZero;
        if (!(sum == expected))
            emit(Violation{"S=" + std::to_string(s1) + " S'=" + std::to_string(s2) +
                               " (length " + std::to_string(t) + ")",
                           to_string(expected) + "/3^t", to_string(sum) + "/3^t"});
    });
    report.elapsed_ms = clock.ms();
    return report;
}

std::vector<EisensteinQ3> coefficients(const AdaptedFunctional& X, int t) {
    if (t < 1 || t > X.horizon())
        throw std::invalid_argument("coefficients: t must be in [1, horizon]");
    const std::int64_t n = pow3(t);
    std::vector<EisensteinQ3> coeffs(static_cast<std::size_t>(n));
    for (std::int64_t s = 0; s < n; ++s) {
        EisensteinQ3 sum;
        for (std::int64_t p = 0; p < n; ++p) {
            const EisensteinQ3 dx = X.value(t, p) - X.value(t - 1, p / 3);
            if (dx.is_zero()) continue;
            sum = sum + conj(onb_by_index(t, s, p)) * dx;
        }
        for (int k = 0; k < t; ++k) sum = div3(sum);  // the exhaustive average
        coeffs[static_cast<std::size_t>(s)] = sum;
    }
    return coeffs;
}

VerificationReport representation_check(const AdaptedFunctional& X, int T, Exec exec) {
    detail::Stopwatch clock;
    if (T < 0 || T > 7) throw std::invalid_argument("representation cap: T must be in [0, 7]");
    if (T > X.horizon())
        throw std::invalid_argument("representation cap: T exceeds the functional's horizon");
    VerificationReport report;
    report.name = "representation of " + X.name() + " up to T=" + std::to_string(T);
    std::vector<VerificationReport> parts;
    for (int t = 1; t <= T; ++t) {
        const std::int64_t n = pow3(t);
        const std::int64_t m = n / 3;  // prefixes of length t-1
        const std::vector<EisensteinQ3> x = coefficients(X, t);
        const std::vector<Eisenstein> table = onb_table(t - 1);  // dZ_S'(p') lookups
        VerificationReport part;
        part.checked = n;
        part.violations = detail::scan_collect(n, exec, [&](std::int64_t p, auto emit) {
            const std::int64_t pp = p / 3;  // prefix of length t-1
            const auto last = static_cast<Step>(p % 3);
            EisensteinQ3 drift, against_dz, against_conj;
            for (std::int64_t sp = 0; sp < m; ++sp) {
                const Eisenstein factor = table[static_cast<std::size_t>(sp * m + pp)];
                // Words of length t grouped by their last letter.
                drift = drift + x[static_cast<std::size_t>(3 * sp)] * EisensteinQ3{factor};
                against_dz =
                    against_dz + x[static_cast<std::size_t>(3 * sp + 1)] * EisensteinQ3{factor};
                against_conj =
                    against_conj + x[static_cast<std::size_t>(3 * sp + 2)] * EisensteinQ3{factor};
            }
            const EisensteinQ3 dz{step_vector(last)};
            const EisensteinQ3 rhs = against_dz * dz + against_conj * conj(dz) + drift;
            const EisensteinQ3 lhs = X.value(t, p) - X.value(t - 1, pp);
            if (!(lhs == rhs))
                emit(Violation{"t=" + std::to_string(t) + " prefix=" + std::to_string(p),
                               to_string(lhs), to_string(rhs)});
            if (X.martingale_hint() && !drift.is_zero())
                emit(Violation{"t=" + std::to_string(t) + " prefix=" + std::to_string(p) +
                                   " drift",
                               "0", to_string(drift)});
        });
        parts.push_back(std::move(part));
    }
    report = merge_reports(report.name, parts);
    report.elapsed_ms = clock.ms();
    return report;
}

}  // namespace pwalk
