#pragma once

#include <cstdint>
#include <vector>

// Classical goodness-of-fit machinery for the Monte Carlo checks. Stdlib
// gives lgamma/erfc; the regularized incomplete gamma and the Kolmogorov
// tail are built on top of them here.

namespace pwalk {

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a),
// a > 0, x >= 0. Series for x < a + 1, continued fraction otherwise.
double gamma_q(double a, double x);

// P(chi2_dof > chi2): the chi-square upper tail.
double chi_square_pvalue(double chi2, std::int64_t dof);

// Phi(x) for the standard normal.
double normal_cdf(double x);

// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

struct KsResult {
    double statistic = 0.0;  // sup |F_n - F|
    double p_value = 1.0;
};

// One-sample KS against the standard normal; data need not be sorted.
// Uses the Stephens small-sample adjustment of the asymptotic tail.
KsResult ks_test_normal(std::vector<double> values);

struct ChiSquareResult {
    double chi2 = 0.0;
    std::int64_t dof = 0;
    double p_value = 1.0;
};

// Pearson chi-square of observed counts against expected counts. Adjacent
// bins are pooled left to right until each pooled bin has expected mass at
// least min_expected (a trailing remainder joins the last bin); dof is
// (pooled bins - 1).
ChiSquareResult chi_square_gof(const std::vector<std::int64_t>& observed,
                               const std::vector<double>& expected,
                               double min_expected = 5.0);

}  // namespace pwalk
