#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "shiha/simulation.hpp"

using namespace shiha;
using namespace shiha::simulation;

namespace {

StudyConfig small_config() {
    StudyConfig cfg;
    cfg.true_params = {0.5, 0.5};
    cfg.sample_sizes = {30, 50};
    cfg.replications = 40;
    cfg.seed = 11;
    return cfg;
}

} // namespace

TEST_CASE("single replication reduces to one squared error") {
    StudyConfig cfg;
    cfg.true_params = {1.0, 1.0};
    cfg.sample_sizes = {50};
    cfg.replications = 1;
    cfg.seed = 3;
    const SimReport rep = run_study(cfg);
    REQUIRE(rep.cells.size() == 1);
    const CellStats& c = rep.cells[0];
    CHECK(c.mse_omega == doctest::Approx(c.bias_omega * c.bias_omega).epsilon(1e-12));
    CHECK(c.mse_eta == doctest::Approx(c.bias_eta * c.bias_eta).epsilon(1e-12));
    CHECK(c.failures == 0);
}

TEST_CASE("mse dominates squared bias") {
    const SimReport rep = run_study(small_config());
    for (const auto& c : rep.cells) {
        CHECK(c.mse_omega >= c.bias_omega * c.bias_omega - 1e-12);
        CHECK(c.mse_eta >= c.bias_eta * c.bias_eta - 1e-12);
        CHECK(c.se_bias_omega > 0.0);
        CHECK(c.se_mse_omega > 0.0);
    }
}

TEST_CASE("studies are bit-for-bit deterministic") {
    const SimReport a = run_study(small_config());
    const SimReport b = run_study(small_config());
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].bias_omega == b.cells[i].bias_omega);
        CHECK(a.cells[i].bias_eta == b.cells[i].bias_eta);
        CHECK(a.cells[i].mse_omega == b.cells[i].mse_omega);
        CHECK(a.cells[i].mse_eta == b.cells[i].mse_eta);
    }
}

TEST_CASE("thread count does not change the result") {
    StudyConfig cfg = small_config();
    cfg.sample_sizes = {30};
    cfg.threads = 1;
    const SimReport seq = run_study(cfg);
    cfg.threads = 4;
    const SimReport par = run_study(cfg);
    CHECK(seq.cells[0].bias_omega == par.cells[0].bias_omega);
    CHECK(seq.cells[0].mse_eta == par.cells[0].mse_eta);
}

TEST_CASE("different seeds perturb within a few standard errors") {
    StudyConfig cfg = small_config();
    cfg.sample_sizes = {50};
    cfg.replications = 200;
    const SimReport a = run_study(cfg);
    cfg.seed = 12;
    const SimReport b = run_study(cfg);
    CHECK(a.cells[0].bias_omega != b.cells[0].bias_omega);
    const double gap = std::fabs(a.cells[0].bias_omega - b.cells[0].bias_omega);
    const double se = std::hypot(a.cells[0].se_bias_omega, b.cells[0].se_bias_omega);
    CHECK(gap < 6.0 * se);
}

TEST_CASE("samplers agree to Monte Carlo error") {
    StudyConfig cfg = small_config();
    cfg.sample_sizes = {100};
    cfg.replications = 300;
    cfg.sampler = Sampler::MIXTURE;
    const SimReport mix = run_study(cfg);
    cfg.sampler = Sampler::INVERSE;
    const SimReport inv = run_study(cfg);
    const double gap = std::fabs(mix.cells[0].bias_omega - inv.cells[0].bias_omega);
    const double se =
        std::hypot(mix.cells[0].se_bias_omega, inv.cells[0].se_bias_omega);
    CHECK(gap < 3.0 * se);
}

TEST_CASE("config validation") {
    StudyConfig bad = small_config();
    bad.sample_sizes = {50, 30};    // not increasing
    CHECK_THROWS_AS(run_study(bad), std::invalid_argument);
    bad = small_config();
    bad.sample_sizes = {};
    CHECK_THROWS_AS(run_study(bad), std::invalid_argument);
    bad = small_config();
    bad.replications = 0;
    CHECK_THROWS_AS(run_study(bad), std::invalid_argument);
    bad = small_config();
    bad.true_params = {-1.0, 0.5};
    CHECK_THROWS_AS(run_study(bad), std::domain_error);
}
