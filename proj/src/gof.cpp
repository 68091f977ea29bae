#include "shiha/gof.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "shiha/numerics.hpp"

namespace shiha::gof {

namespace {

std::vector<double> sorted_copy(const std::vector<double>& data) {
    if (data.empty()) throw std::invalid_argument("gof: data must be non-empty");
    std::vector<double> s(data);
    std::sort(s.begin(), s.end());
    return s;
}

bool has_ties(const std::vector<double>& sorted) {
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

} // namespace

TestResult ks_test(const competitors::ModelSpec& m, const std::vector<double>& data) {
    const std::vector<double> s = sorted_copy(data);
    const int n = static_cast<int>(s.size());
    double d = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double f = competitors::model_cdf(m, s[i - 1]);
        d = std::max(d, std::max(i / static_cast<double>(n) - f,
                                 f - (i - 1) / static_cast<double>(n)));
    }
    // tied observations make the exact no-ties null distribution
    // inapplicable; fall back to the asymptotic tail
    double p;
    if (has_ties(s))
        p = numerics::kolmogorov_asymptotic_sf(std::sqrt(static_cast<double>(n)) * d);
    else
        p = numerics::kolmogorov_sf(d, n);
    return {d, p};
}

namespace {

TestResult ad_core(const competitors::ModelSpec& m, const std::vector<double>& data,
                   bool& clamped) {
    const std::vector<double> s = sorted_copy(data);
    const int n = static_cast<int>(s.size());
    std::vector<double> f(n);
    clamped = false;
    for (int i = 0; i < n; ++i) {
        double v = competitors::model_cdf(m, s[i]);
        if (v < 1e-12 || v > 1.0 - 1e-12) {
            v = std::clamp(v, 1e-12, 1.0 - 1e-12);
            clamped = true;
        }
        f[i] = v;
    }
    double acc = 0.0;
    for (int i = 1; i <= n; ++i)
        acc += (2.0 * i - 1.0) * (std::log(f[i - 1]) + std::log1p(-f[n - i]));
    const double a2 = -static_cast<double>(n) - acc / n;
    return {a2, numerics::anderson_darling_sf(a2)};
}

} // namespace

TestResult ad_test(const competitors::ModelSpec& m, const std::vector<double>& data) {
    bool clamped = false;
    return ad_core(m, data, clamped);
}

GofReport report(const competitors::ModelSpec& m, const std::vector<double>& data) {
    const TestResult ks = ks_test(m, data);
    bool clamped = false;
    const TestResult ad = ad_core(m, data, clamped);
    return {ks.stat, ks.p, ad.stat, ad.p, clamped};
}

std::pair<double, double> information_criteria(double log_lik, int k, int n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("information_criteria: k and n must be >= 1");
    return {2.0 * k - 2.0 * log_lik, k * std::log(static_cast<double>(n)) - 2.0 * log_lik};
}

std::vector<std::pair<double, double>> ttt_points(const std::vector<double>& data) {
    const std::vector<double> s = sorted_copy(data);
    const int n = static_cast<int>(s.size());
    const double total = std::accumulate(s.begin(), s.end(), 0.0);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n + 1);
    pts.emplace_back(0.0, 0.0);
    double prefix = 0.0;
    for (int i = 1; i <= n; ++i) {
        prefix += s[i - 1];
        pts.emplace_back(i / static_cast<double>(n),
                         (prefix + (n - i) * s[i - 1]) / total);
    }
    return pts;
}

std::pair<std::vector<PlotPoint>, std::vector<PlotPoint>>
qq_pp_points(const competitors::ModelSpec& m, const std::vector<double>& data) {
    const std::vector<double> s = sorted_copy(data);
    const int n = static_cast<int>(s.size());
    std::vector<PlotPoint> qq(n), pp(n);
    for (int i = 1; i <= n; ++i) {
        const double prob = (i - 0.5) / n;
        PlotPoint q{0.0, s[i - 1], true};
        try {
            q.x = competitors::model_quantile(m, prob);
        } catch (const std::exception&) {
            q.ok = false;
        }
        qq[i - 1] = q;
        pp[i - 1] = {prob, competitors::model_cdf(m, s[i - 1]), true};
    }
    return {std::move(qq), std::move(pp)};
}

SummaryStats summary_stats(const std::vector<double>& data) {
    const std::vector<double> s = sorted_copy(data);
    const int n = static_cast<int>(s.size());
    if (n < 2) throw std::invalid_argument("summary_stats: variance needs n >= 2");

    auto quartile = [&](double p) {
        const double h = (n - 1) * p;
        const int lo = static_cast<int>(std::floor(h));
        const int hi = std::min(lo + 1, n - 1);
        return s[lo] + (h - lo) * (s[hi] - s[lo]);
    };
    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0, ss = 0.0;
    for (double y : s) {
        const double d = y - mean;
        const double d2 = d * d;
        ss += d2;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;

    SummaryStats out;
    out.min = s.front();
    out.q1 = quartile(0.25);
    out.median = quartile(0.5);
    out.q3 = quartile(0.75);
    out.max = s.back();
    out.mean = mean;
    out.variance = ss / (n - 1);
    out.skewness = m3 / std::pow(m2, 1.5);
    out.kurtosis = m4 / (m2 * m2);
    return out;
}

} // namespace shiha::gof
