#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "shiha/competitors.hpp"
#include "shiha/numerics.hpp"

using namespace shiha;
using namespace shiha::numerics;
using namespace shiha::competitors;

namespace {

const std::vector<ModelSpec> kGrid = {
    {Family::SHIHA, {0.8, 1.2}},
    {Family::APTXGD, {0.9, 0.4}},
    {Family::APTXGD, {0.9, 1.0}},     // the eta=1 reduction
    {Family::APTXGD, {0.7, 3.5}},
    {Family::PLD, {1.1, 0.6}},
    {Family::PLD, {0.8, 1.0}},
    {Family::PLD, {0.5, 2.3}},
    {Family::TPGLD, {1.0, 0.7, 1.4}},
    {Family::TPGLD, {0.6, 1.5, 1.0}},
    {Family::TPGLD, {0.9, 0.5, 0.8}},
    {Family::CJD, {1.3}},
    {Family::AKD, {0.9}},
};

} // namespace

TEST_CASE("family names round trip") {
    for (Family f : {Family::SHIHA, Family::APTXGD, Family::PLD, Family::TPGLD,
                     Family::CJD, Family::AKD}) {
        CHECK(family_from_name(family_name(f)) == f);
        CHECK(static_cast<int>(param_names(f).size()) == param_count(f));
        const ParamBounds b = param_bounds(f);
        CHECK(b.lower.size() == b.upper.size());
        CHECK(static_cast<int>(b.lower.size()) == param_count(f));
    }
    CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
}

TEST_CASE("cdf is consistent with the pdf under quadrature") {
    for (const auto& m : kGrid) {
        // shapes below one make the density unbounded at the origin, so start
        // the integral clear of it and compare cdf increments instead
        const double a = std::isfinite(model_pdf(m, 0.0)) ? 0.0 : 0.05;
        for (double y : {0.3, 1.0, 2.7}) {
            const double viaq = integrate_adaptive(
                [&](double t) { return model_pdf(m, t); }, a, y, 1e-11);
            CHECK(model_cdf(m, y) - model_cdf(m, a) ==
                  doctest::Approx(viaq).epsilon(1e-8));
        }
    }
}

TEST_CASE("cdf limits and monotonicity") {
    for (const auto& m : kGrid) {
        CHECK(model_cdf(m, 0.0) == 0.0);
        CHECK(model_cdf(m, -1.0) == 0.0);
        double prev = 0.0, hi = 1.0;
        while (model_cdf(m, hi) < 1.0 - 1e-12 && hi < 1e6) hi *= 2.0;
        CHECK(model_cdf(m, hi) == doctest::Approx(1.0).epsilon(1e-9));
        for (double y = 0.05; y < 6.0; y += 0.05) {
            const double F = model_cdf(m, y);
            CHECK(F >= prev - 1e-14);
            prev = F;
        }
    }
}

TEST_CASE("log pdf agrees with pdf") {
    for (const auto& m : kGrid)
        for (double y : {0.2, 1.0, 3.1}) {
            CHECK(model_log_pdf(m, y) ==
                  doctest::Approx(std::log(model_pdf(m, y))).epsilon(1e-12));
        }
}

TEST_CASE("densities at the origin follow the shape parameter") {
    // power-type families: infinite at 0 for shape < 1, zero for shape > 1
    CHECK(model_pdf({Family::PLD, {1.0, 0.5}}, 0.0) ==
          std::numeric_limits<double>::infinity());
    CHECK(model_pdf({Family::PLD, {1.0, 2.0}}, 0.0) == 0.0);
    CHECK(model_pdf({Family::TPGLD, {1.0, 1.0, 0.5}}, 0.0) ==
          std::numeric_limits<double>::infinity());
    CHECK(model_pdf({Family::TPGLD, {1.0, 1.0, 2.0}}, 0.0) == 0.0);
    // at shape == 1 the value is finite and matches the right limit
    const double pl1 = model_pdf({Family::PLD, {1.2, 1.0}}, 0.0);
    const double pl1_near = model_pdf({Family::PLD, {1.2, 1.0}}, 1e-9);
    CHECK(pl1 == doctest::Approx(pl1_near).epsilon(1e-6));
    // one-parameter families have finite positive density at 0
    CHECK(model_pdf({Family::CJD, {1.3}}, 0.0) > 0.0);
    CHECK(model_pdf({Family::AKD, {0.9}}, 0.0) > 0.0);
    CHECK(model_pdf({Family::APTXGD, {0.9, 0.4}}, 0.0) > 0.0);
    // negative support is impossible for every family
    for (const auto& m : kGrid) CHECK(model_pdf(m, -0.3) == 0.0);
}

TEST_CASE("aptxgd reduces to its base distribution at eta = 1") {
    // at eta=1 the alpha-power transform is the identity
    const ModelSpec base{Family::APTXGD, {0.9, 1.0}};
    const ModelSpec near{Family::APTXGD, {0.9, 1.0 + 1e-10}};
    for (double y : {0.2, 0.9, 2.4}) {
        CHECK(model_cdf(base, y) == doctest::Approx(model_cdf(near, y)).epsilon(1e-7));
        CHECK(model_pdf(base, y) == doctest::Approx(model_pdf(near, y)).epsilon(1e-6));
        // base cdf: 1 - (1 + w + w^2 y^2/2 + w y) e^{-w y} / (1 + w)  with w = 0.9
        const double w = 0.9;
        const double F0 =
            1.0 - (1.0 + w + w * w * y * y / 2.0 + w * y) * std::exp(-w * y) / (1.0 + w);
        CHECK(model_cdf(base, y) == doctest::Approx(F0).epsilon(1e-12));
    }
}

TEST_CASE("model_quantile inverts model_cdf") {
    for (const auto& m : kGrid)
        for (double p : {0.05, 0.5, 0.95}) {
            const double y = model_quantile(m, p);
            CHECK(model_cdf(m, y) == doctest::Approx(p).epsilon(1e-9));
        }
}

TEST_CASE("parameter validation rejects bad vectors") {
    CHECK_THROWS_AS(model_pdf({Family::PLD, {1.0}}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(model_pdf({Family::CJD, {-1.0}}, 1.0), std::domain_error);
    CHECK_THROWS_AS(model_pdf({Family::TPGLD, {1.0, 1.0}}, 1.0), std::invalid_argument);
}
