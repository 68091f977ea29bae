#pragma once
#include <cstdint>
#include <vector>

namespace shiha {

// Two-parameter lifetime law with density
//   f(y) = omega/(omega+3*eta) * [omega + (2*eta + 8*omega*eta*y) * exp(-omega*y)] * exp(-omega*y)
// on y >= 0.  It is the three-part mixture
//   p1 * Exp(omega) + p2 * Exp(2*omega) + p3 * Gamma(2, rate 2*omega)
// with p1 = omega/(omega+3*eta), p2 = eta/(omega+3*eta), p3 = 2*eta/(omega+3*eta).
// eta = 0 collapses to Exp(omega).
struct ShihaParams {
    double omega;   // scale-like rate, > 0
    double eta;     // shape-like weight, >= 0
};

struct MixtureWeights {
    double p1, p2, p3;
};

struct HazardPeak {
    double y_star;
    double h_max;
};

struct Descriptors {
    double mean;
    double variance;
    double skewness;
    double kurtosis;          // standardized fourth moment
    double excess_kurtosis;   // kurtosis - 3
};

void validate(const ShihaParams& p);

double pdf(const ShihaParams& p, double y);
double log_pdf(const ShihaParams& p, double y);
double cdf(const ShihaParams& p, double y);
double survival(const ShihaParams& p, double y);
double hazard(const ShihaParams& p, double y);

// Interior hazard maximum.  For eta > 0,
//   y* = (W(4*eta/omega * exp(-5/4)) + 5/4) / omega,
//   h_max = omega * (2W + 1) / (W + 1),
// with omega < h_max < 2*omega.  For eta = 0 the hazard is flat at omega
// and the peak is reported at y* = 0.
HazardPeak hazard_peak(const ShihaParams& p);

// Inverse cdf via bracketed root solve; exact 0 at prob = 0.
double quantile(const ShihaParams& p, double prob);

// Moment generating function, finite for t < omega.
double mgf(const ShihaParams& p, double t);

// E[Y^k] = (2^k * omega + 2*eta*k + 3*eta) * k! / (2^k * omega^k * (omega + 3*eta))
double raw_moment(const ShihaParams& p, int k);

Descriptors descriptors(const ShihaParams& p);

// Differential entropy
//   H = ln((omega+3*eta)/omega) + omega*E[Y] - E[ln(omega + (2*eta + 8*omega*eta*Y) e^{-omega Y})]
// with the expectation taken by adaptive quadrature over [0, y_hi],
// y_hi chosen so the survival mass beyond it is < 1e-12.
double entropy(const ShihaParams& p);

MixtureWeights mixture_weights(const ShihaParams& p);

// P(X2 < X1) for independent strength X1 ~ Shiha(p1) and stress X2 ~ Shiha(p2).
double stress_strength(const ShihaParams& strength, const ShihaParams& stress);

std::vector<double> sample_inverse(const ShihaParams& p, int n, std::uint64_t seed);
std::vector<double> sample_mixture(const ShihaParams& p, int n, std::uint64_t seed);

} // namespace shiha
