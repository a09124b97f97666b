#include "pwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pwalk {
namespace {

// Lower-tail series: P(a, x) = gamma(a, x)/Gamma(a), for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper-tail Lentz continued fraction: Q(a, x), for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_pvalue(double chi2, std::int64_t dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_pvalue: dof must be positive");
    return gamma_q(static_cast<double>(dof) / 2.0, chi2 / 2.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    const double pi = 3.141592653589793;
    if (lambda < 1.0) {
        // The alternating series needs ~1/lambda^2 terms here; the
        // theta-transformed series converges in a handful instead.
        const double c = pi * pi / (8.0 * lambda * lambda);
        double sum = 0.0;
        for (int j = 1; j <= 99; j += 2) {
            const double term = std::exp(-c * j * j);
            sum += term;
            if (term < 1e-300) break;
        }
        const double cdf = std::sqrt(2.0 * pi) / lambda * sum;
        return std::min(1.0, std::max(0.0, 1.0 - cdf));
    }
    const double e = -2.0 * lambda * lambda;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = sign * std::exp(e * j * j);
        sum += term;
        if (std::abs(term) < 1e-16) break;
        sign = -sign;
    }
    const double q = 2.0 * sum;
    return std::min(1.0, std::max(0.0, q));
}

KsResult ks_test_normal(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("ks_test_normal: empty sample");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double cdf = normal_cdf(values[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::abs(cdf - lo), std::abs(hi - cdf)));
    }
    const double sqrt_n = std::sqrt(n);
    const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
    return {d, kolmogorov_q(lambda)};
}

ChiSquareResult chi_square_gof(const std::vector<std::int64_t>& observed,
                               const std::vector<double>& expected, double min_expected) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi_square_gof: size mismatch");
    if (observed.empty()) throw std::invalid_argument("chi_square_gof: empty histogram");

    // Pool adjacent bins left to right until each carries expected mass of at
    // least min_expected; whatever is left at the end joins the last bin.
    std::vector<std::int64_t> obs;
    std::vector<double> exp;
    std::int64_t o_acc = 0;
    double e_acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o_acc += observed[i];
        e_acc += expected[i];
        if (e_acc >= min_expected) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
            o_acc = 0;
            e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 || o_acc > 0) {
        if (obs.empty()) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
        } else {
            obs.back() += o_acc;
            exp.back() += e_acc;
        }
    }

    ChiSquareResult result;
    result.dof = static_cast<std::int64_t>(obs.size()) - 1;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double diff = static_cast<double>(obs[i]) - exp[i];
        if (diff != 0.0 || exp[i] != 0.0) result.chi2 += diff * diff / exp[i];
    }
    result.p_value = result.dof >= 1 ? chi_square_pvalue(result.chi2, result.dof) : 1.0;
    return result;
}

}  // namespace pwalk
