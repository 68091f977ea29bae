#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "shiha/competitors.hpp"

namespace shiha::estimation {

struct FitOptions {
    int max_iter = 2000;          // Nelder-Mead iterations per start
    double diam_tol = 1e-8;       // relative simplex diameter at convergence
    double boundary_tol = 1e-6;   // relative closeness that flags a bound
    double step = 0.5;            // initial simplex edge in log-parameter space
};

struct FitResult {
    competitors::ModelSpec model;
    double log_lik = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    int n = 0;
    int k = 0;
    bool converged = false;
    std::vector<bool> at_boundary;
};

// Raised when no start converges; carries the best point seen so far.
struct FitError : std::runtime_error {
    FitResult best_partial;
    FitError(const std::string& msg, FitResult partial)
        : std::runtime_error(msg), best_partial(std::move(partial)) {}
};

double log_likelihood(const competitors::ModelSpec& m, const std::vector<double>& data);

// Maximum likelihood over the family's box bounds.  Optimization runs in
// log-parameter space from a deterministic multi-start grid (omega seeded
// at scales of 1/mean, remaining parameters on a decade grid); the winner
// is the start with the largest likelihood, ties broken toward the
// lexicographically smaller parameter vector.
FitResult fit_mle(competitors::Family family, const std::vector<double>& data,
                  const FitOptions& opts = {});

} // namespace shiha::estimation
