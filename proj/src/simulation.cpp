#include "shiha/simulation.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "shiha/rng.hpp"

namespace shiha::simulation {

namespace {

// Order-independent pairwise sum over f(i) for i in [0, n).
template <class F>
double pairwise_sum(int lo, int hi, const F& f) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (int i = lo; i < hi; ++i) s += f(i);
        return s;
    }
    const int mid = lo + (hi - lo) / 2;
    return pairwise_sum(lo, mid, f) + pairwise_sum(mid, hi, f);
}

struct RepResult {
    double omega = 0.0, eta = 0.0;
    bool ok = false;
};

} // namespace

SimReport run_study(const StudyConfig& cfg) {
    validate(cfg.true_params);
    if (cfg.replications < 1)
        throw std::invalid_argument("run_study: replications must be >= 1");
    if (cfg.sample_sizes.empty())
        throw std::invalid_argument("run_study: sample_sizes must be non-empty");
    for (std::size_t i = 0; i < cfg.sample_sizes.size(); ++i) {
        if (cfg.sample_sizes[i] < 1)
            throw std::invalid_argument("run_study: sample sizes must be positive");
        if (i > 0 && cfg.sample_sizes[i] <= cfg.sample_sizes[i - 1])
            throw std::invalid_argument("run_study: sample sizes must be strictly increasing");
    }

    int n_threads = cfg.threads > 0
                        ? cfg.threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;

    SimReport report;
    report.config = cfg;

    for (int n : cfg.sample_sizes) {
        const int reps = cfg.replications;
        std::vector<RepResult> results(reps);

        auto run_one = [&](int i) {
            const std::uint64_t s = rng::substream_seed(
                cfg.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
            const std::vector<double> sample =
                cfg.sampler == Sampler::MIXTURE
                    ? sample_mixture(cfg.true_params, n, s)
                    : sample_inverse(cfg.true_params, n, s);
            RepResult r;
            try {
                const estimation::FitResult fit =
                    estimation::fit_mle(competitors::Family::SHIHA, sample, cfg.fit);
                r.omega = fit.model.params[0];
                r.eta = fit.model.params[1];
                r.ok = fit.converged;
            } catch (const estimation::FitError&) {
                r.ok = false;
            }
            results[i] = r;
        };

        if (n_threads == 1) {
            for (int i = 0; i < reps; ++i) run_one(i);
        } else {
            std::atomic<int> next{0};
            std::vector<std::thread> pool;
            pool.reserve(n_threads);
            for (int t = 0; t < n_threads; ++t)
                pool.emplace_back([&] {
                    for (int i = next.fetch_add(1); i < reps; i = next.fetch_add(1))
                        run_one(i);
                });
            for (auto& th : pool) th.join();
        }

        std::vector<double> ws, es;
        ws.reserve(reps);
        es.reserve(reps);
        int failures = 0;
        for (const RepResult& r : results) {
            if (r.ok) {
                ws.push_back(r.omega);
                es.push_back(r.eta);
            } else {
                ++failures;
            }
        }
        if (failures * 100 > reps)
            throw std::runtime_error("run_study: more than 1% of replications failed at n=" +
                                     std::to_string(n));
        const int m = static_cast<int>(ws.size());
        if (m == 0)
            throw std::runtime_error("run_study: no successful replications at n=" +
                                     std::to_string(n));

        const double tw = cfg.true_params.omega, te = cfg.true_params.eta;
        auto cell_stats = [&](const std::vector<double>& v, double truth, double& bias,
                              double& mse, double& se_bias, double& se_mse) {
            const double mean = pairwise_sum(0, m, [&](int i) { return v[i]; }) / m;
            bias = mean - truth;
            mse = pairwise_sum(0, m, [&](int i) {
                      const double d = v[i] - truth;
                      return d * d;
                  }) / m;
            const double var_est =
                m > 1 ? pairwise_sum(0, m, [&](int i) {
                            const double d = v[i] - mean;
                            return d * d;
                        }) / (m - 1)
                      : 0.0;
            const double var_sq =
                m > 1 ? pairwise_sum(0, m, [&](int i) {
                            const double d = v[i] - truth;
                            return (d * d - mse) * (d * d - mse);
                        }) / (m - 1)
                      : 0.0;
            se_bias = std::sqrt(var_est / m);
            se_mse = std::sqrt(var_sq / m);
        };

        CellStats c;
        c.n = n;
        c.failures = failures;
        cell_stats(ws, tw, c.bias_omega, c.mse_omega, c.se_bias_omega, c.se_mse_omega);
        cell_stats(es, te, c.bias_eta, c.mse_eta, c.se_bias_eta, c.se_mse_eta);
        report.cells.push_back(c);
    }
    return report;
}

} // namespace shiha::simulation
