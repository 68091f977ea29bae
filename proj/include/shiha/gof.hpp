#pragma once
#include <utility>
#include <vector>

#include "shiha/competitors.hpp"

namespace shiha::gof {

struct GofReport {
    double ks_stat;
    double ks_p;
    double ad_stat;
    double ad_p;
    bool ad_clamped;   // some F(y_i) hit the [1e-12, 1-1e-12] clamp
};

struct SummaryStats {
    double min, q1, median, q3, max;
    double mean, variance, skewness, kurtosis;
};

struct TestResult {
    double stat;
    double p;
};

struct PlotPoint {
    double x, y;
    bool ok;
};

// K-S D against the fitted cdf.  p from the exact n < 100 distribution
// when the data are tie-free, otherwise from the asymptotic tail (ties
// reduce effective resolution; documented, not an error).
TestResult ks_test(const competitors::ModelSpec& m, const std::vector<double>& data);

// Anderson-Darling A-squared with F clamped to [1e-12, 1-1e-12];
// p from the asymptotic upper tail.
TestResult ad_test(const competitors::ModelSpec& m, const std::vector<double>& data);
GofReport report(const competitors::ModelSpec& m, const std::vector<double>& data);

// aic = 2k - 2 logL, bic = k ln(n) - 2 logL
std::pair<double, double> information_criteria(double log_lik, int k, int n);

// Scaled total-time-on-test curve: (0,0) then (i/n, T_i / T_n).
std::vector<std::pair<double, double>> ttt_points(const std::vector<double>& data);

// QQ: (model quantile at (i-0.5)/n, y_(i)); PP: ((i-0.5)/n, F(y_(i))).
std::pair<std::vector<PlotPoint>, std::vector<PlotPoint>>
qq_pp_points(const competitors::ModelSpec& m, const std::vector<double>& data);

// Quartiles interpolate order statistics at h = (n-1)p + 1; variance is
// the n-1 sample version; skewness m3/m2^1.5 and kurtosis m4/m2^2 use
// 1/n central moments.
SummaryStats summary_stats(const std::vector<double>& data);

} // namespace shiha::gof
