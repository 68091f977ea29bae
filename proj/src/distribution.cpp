#include "shiha/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "shiha/numerics.hpp"
#include "shiha/rng.hpp"

namespace shiha {

void validate(const ShihaParams& p) {
    if (!(p.omega > 0.0) || !std::isfinite(p.omega))
        throw std::domain_error("shiha: omega must be positive and finite");
    if (!(p.eta >= 0.0) || !std::isfinite(p.eta))
        throw std::domain_error("shiha: eta must be >= 0 and finite");
}

double pdf(const ShihaParams& p, double y) {
    validate(p);
    if (y < 0.0 || !std::isfinite(y)) return 0.0;
    const double e = std::exp(-p.omega * y);
    return p.omega / (p.omega + 3.0 * p.eta) *
           (p.omega + (2.0 * p.eta + 8.0 * p.omega * p.eta * y) * e) * e;
}

double log_pdf(const ShihaParams& p, double y) {
    validate(p);
    if (y < 0.0 || !std::isfinite(y))
        return -std::numeric_limits<double>::infinity();
    const double e = std::exp(-p.omega * y);
    return std::log(p.omega) - std::log(p.omega + 3.0 * p.eta) +
           std::log(p.omega + (2.0 * p.eta + 8.0 * p.omega * p.eta * y) * e) -
           p.omega * y;
}

double survival(const ShihaParams& p, double y) {
    validate(p);
    if (y < 0.0) return 1.0;
    if (!std::isfinite(y)) return 0.0;
    const double e = std::exp(-p.omega * y);
    return (p.omega + (3.0 * p.eta + 4.0 * p.omega * p.eta * y) * e) * e /
           (p.omega + 3.0 * p.eta);
}

double cdf(const ShihaParams& p, double y) {
    return 1.0 - survival(p, y);
}

double hazard(const ShihaParams& p, double y) {
    validate(p);
    if (y < 0.0) return 0.0;
    const double e = std::exp(-p.omega * y);
    return p.omega * (p.omega + (2.0 * p.eta + 8.0 * p.omega * p.eta * y) * e) /
           (p.omega + (3.0 * p.eta + 4.0 * p.omega * p.eta * y) * e);
}

HazardPeak hazard_peak(const ShihaParams& p) {
    validate(p);
    if (p.eta == 0.0) return {0.0, p.omega};
    const double w = numerics::lambert_w0(4.0 * p.eta / p.omega * std::exp(-1.25));
    return {(w + 1.25) / p.omega, p.omega * (2.0 * w + 1.0) / (w + 1.0)};
}

double quantile(const ShihaParams& p, double prob) {
    validate(p);
    if (!(prob >= 0.0) || prob >= 1.0)
        throw std::domain_error("shiha: quantile probability must lie in [0, 1)");
    if (prob == 0.0) return 0.0;

    double hi = 1.0 / p.omega;
    for (int i = 0; i < 80 && cdf(p, hi) < prob; ++i) hi *= 2.0;
    auto g = [&](double y) { return cdf(p, y) - prob; };
    return numerics::find_root_bracketed(g, 0.0, hi,
                                         numerics::Tolerance{1e-13, 1e-14, 200});
}

double mgf(const ShihaParams& p, double t) {
    validate(p);
    if (!(t < p.omega))
        throw std::domain_error("shiha: mgf requires t < omega");
    const MixtureWeights w = mixture_weights(p);
    const double g2 = 2.0 * p.omega / (2.0 * p.omega - t);
    return w.p1 * p.omega / (p.omega - t) + w.p2 * g2 + w.p3 * g2 * g2;
}

double raw_moment(const ShihaParams& p, int k) {
    validate(p);
    if (k < 0) throw std::domain_error("shiha: raw_moment order must be >= 0");
    if (k == 0) return 1.0;
    const double two_k = std::pow(2.0, k);
    double kfac = 1.0;
    for (int i = 2; i <= k; ++i) kfac *= i;
    return (two_k * p.omega + 2.0 * p.eta * k + 3.0 * p.eta) * kfac /
           (two_k * std::pow(p.omega, k) * (p.omega + 3.0 * p.eta));
}

Descriptors descriptors(const ShihaParams& p) {
    validate(p);
    const double w = p.omega, e = p.eta;
    const double d = w + 3.0 * e;
    const double u = 17.0 * e * e + 18.0 * w * e + 4.0 * w * w;

    Descriptors out;
    out.mean = (2.0 * w + 5.0 * e) / (2.0 * w * d);
    out.variance = u / (4.0 * w * w * d * d);
    out.skewness =
        (106.0 * e * e * e + 234.0 * e * e * w + 114.0 * e * w * w + 16.0 * w * w * w) /
        std::pow(u, 1.5);
    out.kurtosis = 3.0 *
        (611.0 * e * e * e * e + 2076.0 * e * e * e * w + 1608.0 * e * e * w * w +
         472.0 * e * w * w * w + 48.0 * w * w * w * w) / (u * u);
    out.excess_kurtosis = out.kurtosis - 3.0;
    return out;
}

double entropy(const ShihaParams& p) {
    validate(p);
    const double w = p.omega, e = p.eta;

    double y_hi = 1.0 / w;
    for (int i = 0; i < 80 && survival(p, y_hi) >= 1e-12; ++i) y_hi *= 2.0;

    auto integrand = [&](double y) {
        const double ex = std::exp(-w * y);
        return std::log(w + (2.0 * e + 8.0 * w * e * y) * ex) * pdf(p, y);
    };
    const double expected_log = numerics::integrate_adaptive(integrand, 0.0, y_hi, 1e-11);
    return std::log((w + 3.0 * e) / w) + (2.0 * w + 5.0 * e) / (2.0 * (w + 3.0 * e)) -
           expected_log;
}

MixtureWeights mixture_weights(const ShihaParams& p) {
    validate(p);
    const double d = p.omega + 3.0 * p.eta;
    return {p.omega / d, p.eta / d, 2.0 * p.eta / d};
}

double stress_strength(const ShihaParams& strength, const ShihaParams& stress) {
    validate(strength);
    validate(stress);
    const double w1 = strength.omega, e1 = strength.eta;
    const double w2 = stress.omega, e2 = stress.eta;
    const double s12 = w1 + w2;          // omega1 + omega2
    const double s21 = 2.0 * w1 + w2;    // 2*omega1 + omega2
    const double s22 = w1 + 2.0 * w2;    // omega1 + 2*omega2

    const double t_exp = w2 * (w1 / s12 + 2.0 * e1 / s21 + 8.0 * w1 * e1 / (s21 * s21));
    const double t_lin = 3.0 * e2 * (w1 / s22 + e1 / s12 + 2.0 * w1 * e1 / (s12 * s12));
    const double t_gam = 4.0 * w2 * e2 *
        (w1 / (s22 * s22) + e1 / (2.0 * s12 * s12) + 2.0 * w1 * e1 / (s12 * s12 * s12));

    return 1.0 - w1 / ((w1 + 3.0 * e1) * (w2 + 3.0 * e2)) * (t_exp + t_lin + t_gam);
}

std::vector<double> sample_inverse(const ShihaParams& p, int n, std::uint64_t seed) {
    validate(p);
    if (n < 0) throw std::domain_error("shiha: sample size must be >= 0");
    rng::Xoshiro256pp gen(seed);
    std::vector<double> out(n);
    for (auto& y : out) y = quantile(p, gen.uniform());
    return out;
}

std::vector<double> sample_mixture(const ShihaParams& p, int n, std::uint64_t seed) {
    validate(p);
    if (n < 0) throw std::domain_error("shiha: sample size must be >= 0");
    const MixtureWeights w = mixture_weights(p);
    rng::Xoshiro256pp gen(seed);
    std::vector<double> out(n);
    for (auto& y : out) {
        const double u = gen.uniform();
        if (u < w.p1) {
            y = gen.exponential(p.omega);
        } else if (u < w.p1 + w.p2) {
            y = gen.exponential(2.0 * p.omega);
        } else {
            y = gen.exponential(2.0 * p.omega) + gen.exponential(2.0 * p.omega);
        }
    }
    return out;
}

} // namespace shiha
