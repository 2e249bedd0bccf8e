#include "narrative/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace narrative {

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean of empty sequence");
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double population_variance(std::span<const double> xs) {
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return ss / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("sample_stddev needs n >= 2");
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("pearson: length mismatch (" +
                                    std::to_string(xs.size()) + " vs " +
                                    std::to_string(ys.size()) + ")");
    if (xs.size() < 2) throw std::invalid_argument("pearson: need at least 2 points");
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("pearson: zero variance input");
    return sxy / std::sqrt(sxx * syy);
}

namespace {

// Continued fraction for the incomplete beta, evaluated with the modified
// Lentz method.
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        // even step
        double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
        d = 1.0 + num * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        // odd step
        num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
        d = 1.0 + num * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0)
        throw std::invalid_argument("incomplete_beta: a and b must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = a * std::log(x) + b * std::log1p(-x) -
                            (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return std::exp(ln_front) * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - std::exp(ln_front) * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided(double t, double df) {
    if (df <= 0.0) throw std::invalid_argument("student_t_two_sided: df must be positive");
    if (std::isinf(t)) return 0.0;
    const double x = df / (df + t * t);
    return incomplete_beta(df / 2.0, 0.5, x);
}

std::string_view significance_stars(double p) {
    if (p <= 0.001) return "***";
    if (p <= 0.01) return "**";
    if (p <= 0.05) return "*";
    return "ns";
}

LinearFit ols_simple(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("ols_simple: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("ols_simple: need at least 2 points");
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        sxy += dx * (ys[i] - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw std::invalid_argument("ols_simple: degenerate x values");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

WelchResult welch_t(double a_mean, double a_sd, std::size_t a_n,
                    double b_mean, double b_sd, std::size_t b_n) {
    if (a_n < 2 || b_n < 2)
        throw std::invalid_argument("welch_t: both groups need n >= 2");
    WelchResult r;
    const double va = a_sd * a_sd / static_cast<double>(a_n);
    const double vb = b_sd * b_sd / static_cast<double>(b_n);
    const double denom = va + vb;
    if (denom == 0.0) {
        // Both groups constant. Equal means give the null result; unequal
        // means are an exact separation.
        if (a_mean == b_mean) {
            r.t = 0.0;
            r.p = 1.0;
        } else {
            r.t = a_mean > b_mean ? std::numeric_limits<double>::infinity()
                                  : -std::numeric_limits<double>::infinity();
            r.p = 0.0;
        }
        r.df = static_cast<double>(a_n + b_n - 2);
        r.stars = significance_stars(r.p);
        return r;
    }
    r.t = (a_mean - b_mean) / std::sqrt(denom);
    r.df = denom * denom /
           (va * va / static_cast<double>(a_n - 1) + vb * vb / static_cast<double>(b_n - 1));
    r.p = student_t_two_sided(r.t, r.df);
    r.stars = significance_stars(r.p);
    return r;
}

namespace {

// Cholesky solve of the symmetric positive definite system A x = rhs.
// A is given row-major, modified in place. Throws on loss of positive
// definiteness (rank-deficient design).
std::vector<double> cholesky_solve(std::vector<double>& a, std::size_t n,
                                   std::vector<double> rhs) {
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) diag -= a[j * n + k] * a[j * n + k];
        if (!(diag > 0.0) || diag < 1e-12 * std::fabs(a[j * n + j]) + 1e-300)
            throw std::runtime_error("ols_multi: rank-deficient design matrix");
        const double ljj = std::sqrt(diag);
        a[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = v / ljj;
        }
    }
    // forward substitution L y = rhs
    for (std::size_t i = 0; i < n; ++i) {
        double v = rhs[i];
        for (std::size_t k = 0; k < i; ++k) v -= a[i * n + k] * rhs[k];
        rhs[i] = v / a[i * n + i];
    }
    // back substitution L^T x = y
    for (std::size_t ii = n; ii-- > 0;) {
        double v = rhs[ii];
        for (std::size_t k = ii + 1; k < n; ++k) v -= a[k * n + ii] * rhs[k];
        rhs[ii] = v / a[ii * n + ii];
    }
    return rhs;
}

}  // namespace

MultiFit ols_multi(const std::vector<std::vector<double>>& predictors,
                   std::span<const double> outcome) {
    const std::size_t n = outcome.size();
    const std::size_t k = predictors.size();
    const std::size_t p = k + 1;  // with intercept
    if (n < p + 2)
        throw std::invalid_argument("ols_multi: need at least " + std::to_string(p + 2) +
                                    " cases for " + std::to_string(k) + " predictors");
    for (const auto& col : predictors)
        if (col.size() != n) throw std::invalid_argument("ols_multi: column length mismatch");

    auto design = [&](std::size_t row, std::size_t col) -> double {
        return col == 0 ? 1.0 : predictors[col - 1][row];
    };

    // X^T X and X^T y
    std::vector<double> xtx(p * p, 0.0);
    std::vector<double> xty(p, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < p; ++a) {
            const double da = design(i, a);
            xty[a] += da * outcome[i];
            for (std::size_t b = 0; b <= a; ++b) xtx[a * p + b] += da * design(i, b);
        }
    }
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b) xtx[a * p + b] = xtx[b * p + a];

    std::vector<double> factor = xtx;
    const std::vector<double> beta = cholesky_solve(factor, p, xty);

    double rss = 0.0, tss = 0.0;
    const double my = mean(outcome);
    for (std::size_t i = 0; i < n; ++i) {
        double fitted = 0.0;
        for (std::size_t a = 0; a < p; ++a) fitted += beta[a] * design(i, a);
        const double resid = outcome[i] - fitted;
        rss += resid * resid;
        tss += (outcome[i] - my) * (outcome[i] - my);
    }

    MultiFit fit;
    fit.n_cases = n;
    // An outcome that is constant up to rounding leaves tss at the scale of
    // a few squared ulps, so an exact zero check is not enough.
    const double eps = std::numeric_limits<double>::epsilon();
    const double tss_floor =
        64.0 * static_cast<double>(n) * eps * eps * std::max(1.0, my * my);
    fit.r_squared = tss <= tss_floor ? 0.0 : 1.0 - rss / tss;
    const double df_resid = static_cast<double>(n - p);
    const double denom = (1.0 - fit.r_squared) / df_resid;
    fit.f_statistic = denom == 0.0 ? std::numeric_limits<double>::infinity()
                                   : (fit.r_squared / static_cast<double>(k)) / denom;
    const double sigma2 = rss / df_resid;

    fit.coefficients.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
        // diagonal of (X^T X)^-1 via one solve per unit vector
        std::vector<double> e(p, 0.0);
        e[j] = 1.0;
        std::vector<double> refactor = xtx;
        const std::vector<double> col = cholesky_solve(refactor, p, std::move(e));
        Coefficient& c = fit.coefficients[j];
        c.estimate = beta[j];
        c.std_error = std::sqrt(sigma2 * col[j]);
        if (c.std_error > 0.0) {
            c.t = c.estimate / c.std_error;
            c.p = student_t_two_sided(c.t, df_resid);
        } else {
            c.t = 0.0;
            c.p = 1.0;
        }
        c.stars = significance_stars(c.p);
    }
    return fit;
}

}  // namespace narrative
