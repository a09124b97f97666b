#include "pwalk/calculus.hpp"

#include <stdexcept>
#include <utility>

#include "pwalk/distance.hpp"
#include "pwalk/rng.hpp"
#include "scan.hpp"

namespace pwalk {
namespace {

std::string step_str(Step s) { return to_string(s); }

// One step of the Tanaka identity with caller-supplied weights; returns true
// and fills the violation when the identity fails.
bool tanaka_step_violation(const Eisenstein& z, Step s, Eisenstein (*phi_fn)(const Eisenstein&),
                           Eisenstein (*psi_fn)(const Eisenstein&), Violation* out) {
    const Eisenstein sv = step_vector(s);
    const Eisenstein w = phi_fn(z) * sv + psi_fn(z) * conj(sv);
    const std::int64_t mart = tanaka_projection(w);
    const std::int64_t dL = exit_indicator(z, s);
    const std::int64_t lhs = norm(z + sv) - norm(z);
    if (lhs == mart + dL) return false;
    *out = Violation{"z=" + to_string(z) + " step=" + step_str(s),
                     "norm increment " + std::to_string(lhs),
                     "mart " + std::to_string(mart) + " + dL " + std::to_string(dL)};
    return true;
}

}  // namespace

LatticeFunction LatticeFunction::from_generator(std::string name, std::int64_t radius,
                                                Generator gen) {
    if (radius < 0) throw std::invalid_argument("lattice function: negative radius");
    LatticeFunction f;
    f.name_ = std::move(name);
    f.radius_ = radius;
    const std::int64_t count = detail::ball_site_count(radius);
    f.values_.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) f.values_.push_back(gen(detail::ball_site(radius, i)));
    return f;
}

LatticeFunction LatticeFunction::from_values(std::string name, std::int64_t radius,
                                             std::vector<EisensteinQ3> values) {
    if (radius < 0) throw std::invalid_argument("lattice function: negative radius");
    const std::int64_t count = detail::ball_site_count(radius);
    if (static_cast<std::int64_t>(values.size()) != count)
        throw std::invalid_argument("lattice function: table size does not match radius");
    LatticeFunction f;
    f.name_ = std::move(name);
    f.radius_ = radius;
    f.values_ = std::move(values);
    return f;
}

const EisensteinQ3& LatticeFunction::operator()(const Eisenstein& z) const {
    if (z.a < -radius_ || z.a > radius_ || z.b < -radius_ || z.b > radius_)
        throw std::out_of_range("lattice function '" + name_ + "' evaluated at " + to_string(z) +
                                " outside radius " + std::to_string(radius_));
    const std::int64_t w = 2 * radius_ + 1;
    return values_[static_cast<std::size_t>((z.a + radius_) * w + (z.b + radius_))];
}

LatticeFunction norm_function(std::int64_t radius) {
    return LatticeFunction::from_generator("norm", radius, [](const Eisenstein& z) {
        return EisensteinQ3{Eisenstein{norm(z), 0}};
    });
}

LatticeFunction coordinate_a_function(std::int64_t radius) {
    return LatticeFunction::from_generator("coord_a", radius, [](const Eisenstein& z) {
        return EisensteinQ3{Eisenstein{z.a, 0}};
    });
}

LatticeFunction coordinate_b_function(std::int64_t radius) {
    return LatticeFunction::from_generator("coord_b", radius, [](const Eisenstein& z) {
        return EisensteinQ3{Eisenstein{z.b, 0}};
    });
}

LatticeFunction identity_function(std::int64_t radius) {
    return LatticeFunction::from_generator("identity", radius,
                                           [](const Eisenstein& z) { return EisensteinQ3{z}; });
}

LatticeFunction conjugate_function(std::int64_t radius) {
    return LatticeFunction::from_generator(
        "conjugate", radius, [](const Eisenstein& z) { return EisensteinQ3{conj(z)}; });
}

LatticeFunction random_lattice_function(std::int64_t radius, std::uint64_t seed) {
    return LatticeFunction::from_generator(
        "random" + std::to_string(seed), radius, [seed](const Eisenstein& z) {
            // Three independent draws keyed by the site; values in
            // (1/3) Z[zeta] with coordinates in [-9, 9].
            const std::uint64_t site =
                static_cast<std::uint64_t>(z.a + (1 << 20)) * 0x100000000ull +
                static_cast<std::uint64_t>(z.b + (1 << 20));
            const std::int64_t a = static_cast<std::int64_t>(counter_draw(seed, 1, site) % 19) - 9;
            const std::int64_t b = static_cast<std::int64_t>(counter_draw(seed, 2, site) % 19) - 9;
            const int p = static_cast<int>(counter_draw(seed, 3, site) % 2);
            return EisensteinQ3{Eisenstein{a, b}, p};
        });
}

ItoCoefficients ito_coefficients(const LatticeFunction& f, const Eisenstein& z) {
    const EisensteinQ3 f1 = f(z + kOne);
    const EisensteinQ3 f2 = f(z + kZeta);
    const EisensteinQ3 f3 = f(z + kZetaSq);
    return {div3(f1 + kZetaSq * f2 + kZeta * f3), div3(f1 + kZeta * f2 + kZetaSq * f3),
            div3(f1 + f2 + f3 - Eisenstein{3, 0} * f(z))};
}

EisensteinQ3 discrete_derivative(const LatticeFunction& f, const Eisenstein& z) {
    return div3(f(z + kOne) + kZeta * f(z + kZeta) + kZetaSq * f(z + kZetaSq));
}

EisensteinQ3 discrete_laplacian(const LatticeFunction& f, const Eisenstein& z) {
    return div3(f(z + kOne) + f(z + kZeta) + f(z + kZetaSq) - Eisenstein{3, 0} * f(z));
}

VerificationReport ito_identity_check(const LatticeFunction& f, const WalkPath& path) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.name = "ito identity, f=" + f.name();
    report.checked = path.horizon();
    for (std::size_t t = 0; t < path.steps.size(); ++t) {
        const Eisenstein& z = path.positions[t];
        const ItoCoefficients c = ito_coefficients(f, z);
        const EisensteinQ3 dz{step_vector(path.steps[t])};
        const EisensteinQ3 lhs = f(path.positions[t + 1]) - f(z);
        const EisensteinQ3 rhs = c.alpha * dz + c.beta * conj(dz) + c.gamma;
        if (!(lhs == rhs)) {
            report.violations.push_back(
                Violation{"t=" + std::to_string(t) + " z=" + to_string(z) +
                              " step=" + step_str(path.steps[t]),
                          to_string(lhs), to_string(rhs)});
            if (report.violations.size() >= detail::kViolationCap) break;
        }
    }
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport ito_path_scan(const LatticeFunction& f, const PathEnumeration& paths,
                                 Exec exec) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.name = "ito identity, f=" + f.name() + ", all paths T=" +
                  std::to_string(paths.horizon()) + " from " + to_string(paths.start());
    report.checked = paths.size() * paths.horizon();
    report.violations = detail::scan_collect(paths.size(), exec, [&](std::int64_t i, auto emit) {
        const WalkPath path = paths.path(i);
        for (std::size_t t = 0; t < path.steps.size(); ++t) {
            const Eisenstein& z = path.positions[t];
            const ItoCoefficients c = ito_coefficients(f, z);
            const EisensteinQ3 dz{step_vector(path.steps[t])};
            const EisensteinQ3 lhs = f(path.positions[t + 1]) - f(z);
            const EisensteinQ3 rhs = c.alpha * dz + c.beta * conj(dz) + c.gamma;
            if (!(lhs == rhs))
                emit(Violation{"path " + std::to_string(i) + " t=" + std::to_string(t) +
                                   " z=" + to_string(z),
                               to_string(lhs), to_string(rhs)});
        }
    });
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport real_ito_identity_check(const LatticeFunction& f, const WalkPath& path) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.name = "real-valued ito reduction, f=" + f.name();
    report.checked = path.horizon();
    const Sqrt3Ext two{Rational(2), Rational(0)};
    for (std::size_t t = 0; t < path.steps.size(); ++t) {
        const Eisenstein& z = path.positions[t];
        const EisensteinQ3 fz = f(z);
        const EisensteinQ3 fnext = f(path.positions[t + 1]);
        if (fz.num.b != 0 || fnext.num.b != 0)
            throw std::invalid_argument("real-valued reduction needs a real-valued function");
        const EisensteinQ3 df = discrete_derivative(f, z);
        const EisensteinQ3 lf = discrete_laplacian(f, z);
        const EisensteinQ3 dz{step_vector(path.steps[t])};
        const Sqrt3Ext lhs = cartesian_re(fnext - fz);
        const Sqrt3Ext rhs = two * (cartesian_re(df) * cartesian_re(dz) +
                                    cartesian_im(df) * cartesian_im(dz)) +
                             cartesian_re(lf);
        if (!(lhs == rhs)) {
            report.violations.push_back(Violation{
                "t=" + std::to_string(t) + " z=" + to_string(z),
                to_string(lhs.u) + "+" + to_string(lhs.v) + "*sqrt3",
                to_string(rhs.u) + "+" + to_string(rhs.v) + "*sqrt3"});
            if (report.violations.size() >= detail::kViolationCap) break;
        }
    }
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport tanaka_identity_check(const WalkPath& path) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.name = "tanaka identity along path";
    report.checked = path.horizon();
    const std::vector<LocalTimeLedger> ledgers = local_time(path);
    for (std::size_t t = 0; t < path.steps.size(); ++t) {
        const Eisenstein& z = path.positions[t];
        Violation v;
        if (tanaka_step_violation(z, path.steps[t], &phi, &psi, &v)) {
            v.location = "t=" + std::to_string(t) + " " + v.location;
            report.violations.push_back(std::move(v));
        }
        // dL from the increment must be the ledger increment.
        const std::int64_t ledger_dL = ledgers[t + 1].L() - ledgers[t].L();
        const std::int64_t site_dL = exit_indicator(z, path.steps[t]);
        if (ledger_dL != site_dL)
            report.violations.push_back(Violation{
                "t=" + std::to_string(t) + " z=" + to_string(z) + " ledger",
                "dL " + std::to_string(site_dL), "dL " + std::to_string(ledger_dL)});
        if (report.violations.size() >= detail::kViolationCap) break;
    }
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport tanaka_site_scan_with(std::int64_t radius,
                                         Eisenstein (*phi_fn)(const Eisenstein&),
                                         Eisenstein (*psi_fn)(const Eisenstein&), Exec exec) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.name = "tanaka identity, all single steps in radius " + std::to_string(radius);
    const std::int64_t sites = detail::ball_site_count(radius);
    report.checked = sites * 3;
    report.violations =
        detail::scan_collect(sites, exec, [radius, phi_fn, psi_fn](std::int64_t i, auto emit) {
            const Eisenstein z = detail::ball_site(radius, i);
            for (Step s : kSteps) {
                Violation v;
                if (tanaka_step_violation(z, s, phi_fn, psi_fn, &v)) emit(std::move(v));
            }
        });
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport tanaka_site_scan(std::int64_t radius, Exec exec) {
    return tanaka_site_scan_with(radius, &phi, &psi, exec);
}

VerificationReport tanaka_path_scan(const PathEnumeration& paths, Exec exec) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.name = "tanaka identity, all paths T=" + std::to_string(paths.horizon()) + " from " +
                  to_string(paths.start());
    report.checked = paths.size() * paths.horizon();
    report.violations = detail::scan_collect(paths.size(), exec, [&paths](std::int64_t i,
                                                                          auto emit) {
        const WalkPath path = paths.path(i);
        const std::vector<LocalTimeLedger> ledgers = local_time(path);
        for (std::size_t t = 0; t < path.steps.size(); ++t) {
            const Eisenstein& z = path.positions[t];
            Violation v;
            if (tanaka_step_violation(z, path.steps[t], &phi, &psi, &v)) {
                v.location = "path " + std::to_string(i) + " t=" + std::to_string(t) + " " +
                             v.location;
                emit(std::move(v));
            }
            const std::int64_t ledger_dL = ledgers[t + 1].L() - ledgers[t].L();
            if (ledger_dL != exit_indicator(z, path.steps[t]))
                emit(Violation{"path " + std::to_string(i) + " t=" + std::to_string(t) +
                                   " ledger",
                               "one exit accounting", "mismatched dL"});
        }
    });
    report.elapsed_ms = clock.ms();
    return report;
}

}  // namespace pwalk
