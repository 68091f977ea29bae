#pragma once
#include <cstdint>
#include <vector>

#include "shiha/distribution.hpp"
#include "shiha/estimation.hpp"

namespace shiha::simulation {

enum class Sampler { INVERSE, MIXTURE };

struct StudyConfig {
    ShihaParams true_params;
    std::vector<int> sample_sizes;     // strictly increasing
    int replications = 2000;
    std::uint64_t seed = 1;
    Sampler sampler = Sampler::MIXTURE;
    int threads = 0;                   // 0 = hardware concurrency
    estimation::FitOptions fit{};
};

struct CellStats {
    int n;
    double bias_omega, bias_eta;
    double mse_omega, mse_eta;
    // Monte Carlo standard errors of the bias and MSE estimates
    double se_bias_omega, se_bias_eta;
    double se_mse_omega, se_mse_eta;
    int failures;
};

struct SimReport {
    StudyConfig config;
    std::vector<CellStats> cells;      // one per sample size
};

// Per-(n, i) substream seeds make the report identical for any thread
// count; replications that fail to converge are counted and excluded,
// and more than 1% of them in a cell aborts the study.
SimReport run_study(const StudyConfig& cfg);

} // namespace shiha::simulation
