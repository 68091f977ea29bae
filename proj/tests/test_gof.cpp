#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "shiha/competitors.hpp"
#include "shiha/data.hpp"
#include "shiha/gof.hpp"
#include "shiha/numerics.hpp"

using namespace shiha;
using namespace shiha::numerics;
using namespace shiha::competitors;
using namespace shiha::gof;

TEST_CASE("ks statistic on data placed at exact model quantiles") {
    // data at quantiles of (i - 0.5)/n gives D = 0.5/n by construction
    const ModelSpec m{Family::SHIHA, {1.0, 1.0}};
    for (int n : {5, 10, 40}) {
        std::vector<double> y;
        for (int i = 1; i <= n; ++i)
            y.push_back(model_quantile(m, (i - 0.5) / n));
        const auto [d, p] = ks_test(m, y);
        CHECK(d == doctest::Approx(0.5 / n).epsilon(1e-8));
        CHECK(p > 0.99);
    }
}

TEST_CASE("ks statistic is invariant under the probability integral transform") {
    const ModelSpec m{Family::SHIHA, {0.7, 1.3}};
    const auto ds = data::builtin_dataset("vinyl_chloride");
    const auto [d1, p1] = ks_test(m, ds.values);
    // transform data through F and compare against the uniform cdf: the
    // empirical-vs-model gaps coincide point by point
    std::vector<double> u;
    for (double y : ds.values) u.push_back(model_cdf(m, y));
    std::sort(u.begin(), u.end());
    const int n = static_cast<int>(u.size());
    double d2 = 0.0;
    for (int i = 1; i <= n; ++i) {
        d2 = std::max(d2, i / static_cast<double>(n) - u[i - 1]);
        d2 = std::max(d2, u[i - 1] - (i - 1) / static_cast<double>(n));
    }
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
    CHECK(p1 > 0.0);
    CHECK(p1 < 1.0);
}

TEST_CASE("tied observations fall back to the asymptotic ks p-value") {
    const ModelSpec m{Family::CJD, {1.0}};
    std::vector<double> tied = {0.5, 1.0, 1.0, 2.0, 3.0};
    const auto [d, p] = ks_test(m, tied);
    const double expect = kolmogorov_asymptotic_sf(std::sqrt(5.0) * d);
    CHECK(p == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("ad statistic formula on a hand-checked case") {
    // two points with F values 0.25 and 0.75:
    // A2 = -2 - ( 1*[ln .25 + ln .25] + 3*[ln .75 + ln .75] ) / 2
    const ModelSpec m{Family::SHIHA, {1.0, 0.0}};   // Exp(1): F(y) = 1 - e^-y
    const std::vector<double> y = {-std::log(0.75), -std::log(0.25)};
    const auto [a2, p] = ad_test(m, y);
    const double expect =
        -2.0 - (1.0 * (std::log(0.25) + std::log(0.25)) +
                3.0 * (std::log(0.75) + std::log(0.75))) / 2.0;
    CHECK(a2 == doctest::Approx(expect).epsilon(1e-12));
    CHECK(p > 0.0);
}

TEST_CASE("ad statistic grows when a far outlier is appended") {
    const ModelSpec m{Family::SHIHA, {1.0, 0.5}};
    std::vector<double> y;
    for (int i = 1; i <= 20; ++i)
        y.push_back(model_quantile(m, (i - 0.5) / 20.0));
    const auto [base, p0] = ad_test(m, y);
    CHECK(base < 0.3);    // well-matched sample keeps A2 small
    y.push_back(60.0);
    const auto [bumped, p1] = ad_test(m, y);
    CHECK(bumped > base);
    CHECK(p1 < p0);
    const GofReport rep = report(m, y);
    CHECK(rep.ad_stat == doctest::Approx(bumped).epsilon(1e-14));
    CHECK(rep.ad_clamped);    // F(60) rounds into the clamp window
}

TEST_CASE("ttt points on a tiny sample") {
    const auto pts = ttt_points({1.0, 2.0, 3.0});
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].first == 0.0);
    CHECK(pts[0].second == 0.0);
    CHECK(pts[1].first == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pts[1].second == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pts[2].second == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(pts[3].first == 1.0);
    CHECK(pts[3].second == doctest::Approx(1.0).epsilon(1e-15));

    // scale invariance and the constant-data envelope
    const auto scaled = ttt_points({10.0, 20.0, 30.0});
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(pts[i].second == doctest::Approx(scaled[i].second).epsilon(1e-14));
    const auto flat = ttt_points({4.0, 4.0, 4.0, 4.0});
    for (std::size_t i = 1; i < flat.size(); ++i)
        CHECK(flat[i].second == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("qq/pp coordinates") {
    const ModelSpec m{Family::SHIHA, {1.0, 1.0}};
    std::vector<double> y;
    const int n = 12;
    for (int i = 1; i <= n; ++i)
        y.push_back(model_quantile(m, (i - 0.5) / n));
    const auto [qq, pp] = qq_pp_points(m, y);
    REQUIRE(qq.size() == y.size());
    REQUIRE(pp.size() == y.size());
    for (int i = 0; i < n; ++i) {
        CHECK(qq[i].ok);
        CHECK(qq[i].x == doctest::Approx(qq[i].y).epsilon(1e-8));   // identity line
        CHECK(pp[i].x == doctest::Approx((i + 0.5) / n).epsilon(1e-15));
        CHECK(pp[i].y == doctest::Approx((i + 0.5) / n).epsilon(1e-8));
        if (i) CHECK(pp[i].y >= pp[i - 1].y);
    }
}

TEST_CASE("summary stats on a tiny sample and reference datasets") {
    const SummaryStats tiny = summary_stats({1.0, 2.0, 3.0});
    CHECK(tiny.mean == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(tiny.variance == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tiny.min == 1.0);
    CHECK(tiny.median == 2.0);
    CHECK(tiny.max == 3.0);
    CHECK_THROWS_AS(summary_stats({1.0}), std::invalid_argument);

    const auto d1 = data::builtin_dataset("failure_times");
    const SummaryStats s1 = summary_stats(d1.values);
    CHECK(s1.mean == doctest::Approx(55.123).epsilon(2e-5));
    CHECK(s1.variance == doctest::Approx(1685.495).epsilon(1e-5));

    const auto d2 = data::builtin_dataset("vinyl_chloride");
    const SummaryStats s2 = summary_stats(d2.values);
    CHECK(s2.q1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s2.median == doctest::Approx(1.15).epsilon(1e-12));
    CHECK(s2.q3 == doctest::Approx(2.475).epsilon(1e-9));
    CHECK(s2.min <= s2.q1);
    CHECK(s2.q1 <= s2.median);
    CHECK(s2.median <= s2.q3);
    CHECK(s2.q3 <= s2.max);
}

TEST_CASE("empty data is rejected") {
    const ModelSpec m{Family::SHIHA, {1.0, 1.0}};
    CHECK_THROWS_AS(ks_test(m, {}), std::invalid_argument);
    CHECK_THROWS_AS(ad_test(m, {}), std::invalid_argument);
    CHECK_THROWS_AS(ttt_points({}), std::invalid_argument);
    CHECK_THROWS_AS(summary_stats({}), std::invalid_argument);
}
