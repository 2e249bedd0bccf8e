#pragma once

// Reference implementations used to cross-check the library. Everything in
// this header is coded straight from textbook formulas, deliberately taking
// different routes than src/ (raw-moment Pearson instead of centered sums,
// Gauss-Jordan instead of Cholesky, Simpson quadrature instead of the
// incomplete-beta tail, a fixpoint merger instead of a sorted sweep, the
// full double loop for modularity), so agreement is evidence, not an echo.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Pearson via the raw-moment identity r = (E[xy] - E[x]E[y]) / (sd_x sd_y).
inline double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        syy += ys[i] * ys[i];
        sxy += xs[i] * ys[i];
    }
    const double cov = sxy / n - (sx / n) * (sy / n);
    const double vx = sxx / n - (sx / n) * (sx / n);
    const double vy = syy / n - (sy / n) * (sy / n);
    return cov / std::sqrt(vx * vy);
}

struct Line {
    double slope = 0.0;
    double intercept = 0.0;
};

// Simple OLS from the raw sums: slope = (n Sxy - Sx Sy) / (n Sxx - Sx^2).
inline Line ols_simple(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    Line out;
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.intercept = sy / n - out.slope * sx / n;
    return out;
}

struct MultiResult {
    std::vector<double> beta;       // intercept first
    std::vector<double> std_error;  // same order
    double r_squared = 0.0;
    double f_statistic = 0.0;
};

// Multiple OLS with intercept, solved by Gauss-Jordan elimination with
// partial pivoting on [X'X | I], which also yields the (X'X)^-1 diagonal
// for the standard errors.
inline MultiResult ols_multi(const std::vector<std::vector<double>>& predictors,
                             const std::vector<double>& y) {
    const std::size_t n = y.size();
    const std::size_t p = predictors.size() + 1;
    std::vector<std::vector<double>> X(n, std::vector<double>(p, 1.0));
    for (std::size_t j = 0; j < predictors.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) X[i][j + 1] = predictors[j][i];

    std::vector<std::vector<double>> a(p, std::vector<double>(2 * p, 0.0));
    std::vector<double> xty(p, 0.0);
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < p; ++c)
            for (std::size_t i = 0; i < n; ++i) a[r][c] += X[i][r] * X[i][c];
        a[r][p + r] = 1.0;
        for (std::size_t i = 0; i < n; ++i) xty[r] += X[i][r] * y[i];
    }
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < p; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        const double d = a[col][col];
        if (std::fabs(d) < 1e-12) throw std::runtime_error("oracle: singular X'X");
        for (double& v : a[col]) v /= d;
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            const double f = a[r][col];
            for (std::size_t c = 0; c < 2 * p; ++c) a[r][c] -= f * a[col][c];
        }
    }

    MultiResult out;
    out.beta.assign(p, 0.0);
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c) out.beta[r] += a[r][p + c] * xty[c];

    double ss_res = 0.0, ss_tot = 0.0;
    const double ybar = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        double fit = 0.0;
        for (std::size_t c = 0; c < p; ++c) fit += X[i][c] * out.beta[c];
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    const double sigma2 = ss_res / static_cast<double>(n - p);
    out.std_error.assign(p, 0.0);
    for (std::size_t r = 0; r < p; ++r) out.std_error[r] = std::sqrt(sigma2 * a[r][p + r]);
    out.r_squared = 1.0 - ss_res / ss_tot;
    const double k = static_cast<double>(p - 1);
    out.f_statistic =
        (out.r_squared / k) / ((1.0 - out.r_squared) / (static_cast<double>(n) - k - 1.0));
    return out;
}

// Two-sided Student-t tail by composite Simpson quadrature of the density
// over [0, |t|]: P(|T| >= |t|) = 1 - 2 * integral. Good to ~1e-10 for the
// moderate t and df used in tests.
inline double student_t_two_sided(double t, double df) {
    const double x = std::fabs(t);
    if (x == 0.0) return 1.0;
    const double log_c = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                         0.5 * std::log(df * std::acos(-1.0));
    auto density = [&](double u) {
        return std::exp(log_c - (df + 1.0) / 2.0 * std::log1p(u * u / df));
    };
    const std::size_t steps = 40000;  // even
    const double h = x / static_cast<double>(steps);
    double sum = density(0.0) + density(x);
    for (std::size_t i = 1; i < steps; ++i)
        sum += density(h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    const double integral = sum * h / 3.0;
    return std::max(0.0, 1.0 - 2.0 * integral);
}

// Prefix sums of a masked series, via the standard library.
inline std::vector<double> prefix_sums(const std::vector<double>& xs) {
    std::vector<double> out(xs.size(), 0.0);
    std::partial_sum(xs.begin(), xs.end(), out.begin());
    return out;
}

// Cluster merging by fixpoint iteration: start from singletons and keep
// fusing any adjacent pair whose boundary distance is within the gap until
// nothing changes.
inline std::vector<std::pair<std::size_t, std::size_t>> merge_clusters(
    const std::set<std::size_t>& indices, std::size_t gap) {
    std::vector<std::pair<std::size_t, std::size_t>> clusters;
    for (std::size_t i : indices) clusters.emplace_back(i, i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
            if (clusters[i + 1].first - clusters[i].second <= gap) {
                clusters[i].second = clusters[i + 1].second;
                clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    return clusters;
}

// Weighted modularity by the full double loop over ordered node pairs:
// Q = sum_uv (A_uv / 2m - k_u k_v / (2m)^2) [c_u == c_v].
inline double modularity(
    const std::map<std::pair<std::string, std::string>, std::uint64_t>& edges,
    const std::map<std::string, std::size_t>& assignment) {
    std::map<std::string, double> degree;
    std::map<std::pair<std::string, std::string>, double> adj;
    double two_m = 0.0;
    for (const auto& [pair, w] : edges) {
        const double weight = static_cast<double>(w);
        degree[pair.first] += weight;
        degree[pair.second] += weight;
        two_m += 2.0 * weight;
        adj[pair] += weight;
        adj[{pair.second, pair.first}] += weight;
    }
    double q = 0.0;
    for (const auto& [u, du] : degree) {
        for (const auto& [v, dv] : degree) {
            if (assignment.at(u) != assignment.at(v)) continue;
            const auto it = adj.find({u, v});
            const double a = it == adj.end() ? 0.0 : it->second;
            q += a / two_m - (du * dv) / (two_m * two_m);
        }
    }
    return q;
}

// All set partitions of {0..n-1} as restricted growth strings; Bell(6) =
// 203, so exhaustive modularity search stays cheap for the graphs tested.
inline std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) return out;
    std::vector<std::size_t> rgs(n, 0);
    while (true) {
        out.push_back(rgs);
        bool advanced = false;
        for (std::size_t i = n; i-- > 1;) {
            const std::size_t cap = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(i));
            if (rgs[i] <= cap) {
                ++rgs[i];
                std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) return out;
    }
}

}  // namespace oracle
