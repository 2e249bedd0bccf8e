#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace narrative {

double mean(std::span<const double> xs);

// Population variance (divide by N).
double population_variance(std::span<const double> xs);

// Sample standard deviation (divide by N-1). Requires at least two values.
double sample_stddev(std::span<const double> xs);

// Sample Pearson correlation coefficient. Throws std::invalid_argument on
// length mismatch, fewer than two points, or zero variance in either input.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Regularized incomplete beta function I_x(a, b), continued-fraction
// evaluation. Accurate to ~1e-12 for the parameter ranges used here.
double incomplete_beta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with df degrees of freedom.
double student_t_two_sided(double t, double df);

// Significance stars: "***" for p <= 0.001, "**" for p <= 0.01,
// "*" for p <= 0.05, otherwise "ns".
std::string_view significance_stars(double p);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Least-squares line through (xs, ys). Throws std::invalid_argument when
// fewer than two points or the x values are degenerate.
LinearFit ols_simple(std::span<const double> xs, std::span<const double> ys);

struct WelchResult {
    double t = 0.0;
    double df = 1.0;
    double p = 1.0;
    std::string_view stars = "ns";
};

// Welch's unequal-variance two-sample t test from summary statistics.
// Standard deviations are sample (N-1) values. Requires both n >= 2.
WelchResult welch_t(double a_mean, double a_sd, std::size_t a_n,
                    double b_mean, double b_sd, std::size_t b_n);

struct Coefficient {
    double estimate = 0.0;
    double std_error = 0.0;
    double t = 0.0;
    double p = 1.0;
    std::string_view stars = "ns";
};

struct MultiFit {
    std::vector<Coefficient> coefficients;  // intercept first, then predictors
    double r_squared = 0.0;
    double f_statistic = 0.0;
    std::size_t n_cases = 0;
};

// OLS with intercept, solved from the normal equations by Cholesky
// factorization. `predictors` holds one column per predictor, all of the
// same length as `outcome`. Throws std::invalid_argument on undersized
// samples and std::runtime_error on a rank-deficient design.
MultiFit ols_multi(const std::vector<std::vector<double>>& predictors,
                   std::span<const double> outcome);

}  // namespace narrative
