#include "shiha/numerics.hpp"

#include <algorithm>
#include <vector>

namespace shiha::numerics {

double lambert_w0(double x) {
    if (std::isnan(x) || x < 0.0)
        throw std::domain_error("lambert_w0: argument must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return std::numeric_limits<double>::infinity();

    double w = std::log1p(x);   // good global seed on [0, inf)
    for (int i = 0; i < 100; ++i) {
        const double ew = std::exp(w);
        const double r = w * ew - x;
        // Halley step; cubic convergence makes the post-step iterate
        // machine-exact once the step itself is a few ulp
        const double denom = ew * (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0);
        const double dw = r / denom;
        w -= dw;
        if (std::fabs(dw) <= 4e-16 * (1.0 + std::fabs(w))) break;
    }
    const double r = w * std::exp(w) - x;
    if (std::fabs(r) > 1e-12 * std::max(1.0, x))
        throw std::runtime_error("lambert_w0: did not converge");
    return w;
}

namespace {

// P(D_n < d) by the Marsaglia-Tsang-Wang matrix method.
void mat_multiply(const std::vector<double>& A, const std::vector<double>& B,
                  std::vector<double>& C, int m) {
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += A[i * m + k] * B[k * m + j];
            C[i * m + j] = s;
        }
}

void mat_power(const std::vector<double>& A, int eA, std::vector<double>& V,
               int& eV, int m, int n) {
    if (n == 1) {
        V = A;
        eV = eA;
        return;
    }
    mat_power(A, eA, V, eV, m, n / 2);
    std::vector<double> B(m * m);
    mat_multiply(V, V, B, m);
    int eB = 2 * eV;
    if (n % 2 == 0) {
        V = B;
        eV = eB;
    } else {
        mat_multiply(A, B, V, m);
        eV = eA + eB;
    }
    const int c = (m + 1) / 2 - 1;
    if (V[c * m + c] > 1e140) {
        for (double& v : V) v *= 1e-140;
        eV += 140;
    }
}

double ks_exact_cdf(double d, int n) {
    const int k = static_cast<int>(std::ceil(n * d));
    const int m = 2 * k - 1;
    const double h = k - n * d;

    std::vector<double> H(m * m), Q(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            H[i * m + j] = (i - j + 1 < 0) ? 0.0 : 1.0;
    for (int i = 0; i < m; ++i) {
        H[i * m] -= std::pow(h, i + 1);
        H[(m - 1) * m + i] -= std::pow(h, m - i);
    }
    H[(m - 1) * m] += (2.0 * h - 1.0 > 0.0 ? std::pow(2.0 * h - 1.0, m) : 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i - j + 1 > 0)
                for (int g = 1; g <= i - j + 1; ++g) H[i * m + j] /= g;

    int eQ = 0;
    mat_power(H, 0, Q, eQ, m, n);
    double s = Q[(k - 1) * m + k - 1];
    for (int i = 1; i <= n; ++i) {
        s = s * i / n;
        if (s < 1e-140) {
            s *= 1e140;
            eQ -= 140;
        }
    }
    return s * std::pow(10.0, eQ);
}

} // namespace

double kolmogorov_asymptotic_sf(double lambda) {
    if (!(lambda > 0.0)) return 1.0;
    if (lambda < 1.0) {
        // cdf P(K <= lambda) = sqrt(2*pi)/lambda * sum_{j odd} exp(-j^2 pi^2 / (8 lambda^2))
        const double c = M_PI * M_PI / (8.0 * lambda * lambda);
        double p = 0.0;
        for (int j = 1; j < 2000; j += 2) {
            const double term = std::exp(-static_cast<double>(j) * j * c);
            p += term;
            if (term < 1e-16 * (p + 1e-300)) break;
        }
        p *= std::sqrt(2.0 * M_PI) / lambda;
        return std::clamp(1.0 - p, 0.0, 1.0);
    }
    double q = 0.0;
    double sign = 1.0;
    for (int j = 1; j < 2000; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        q += sign * term;
        sign = -sign;
        if (term < 1e-12) break;
    }
    return std::clamp(2.0 * q, 0.0, 1.0);
}

double kolmogorov_sf(double d, int n) {
    if (n < 1) throw std::invalid_argument("kolmogorov_sf: n must be >= 1");
    if (!(d > 0.0)) return 1.0;
    if (d >= 1.0) return 0.0;
    if (n < 100) return std::clamp(1.0 - ks_exact_cdf(d, n), 0.0, 1.0);
    return kolmogorov_asymptotic_sf(std::sqrt(static_cast<double>(n)) * d);
}

namespace {

double adinf_low(double z) {
    // valid branch for 0 < z < 2
    return std::pow(z, -0.5) * std::exp(-1.2337141 / z) *
           (2.00012 + (0.247105 -
             (0.0649821 - (0.0347962 - (0.011672 - 0.00168691 * z) * z) * z) * z) * z);
}

double adinf_high(double z) {
    // valid branch for z >= 2
    return std::exp(-std::exp(1.0776 -
           (2.30695 - (0.43424 - (0.082433 - (0.008056 - 0.0003146 * z) * z) * z) * z) * z));
}

} // namespace

double anderson_darling_sf(double a2) {
    if (!(a2 > 0.0)) return 1.0;
    double cdf;
    if (a2 <= 1.6) {
        cdf = adinf_low(a2);
    } else if (a2 >= 2.0) {
        cdf = adinf_high(a2);
    } else {
        const double t = (a2 - 1.6) / 0.4;
        cdf = (1.0 - t) * adinf_low(a2) + t * adinf_high(a2);
    }
    return std::clamp(1.0 - cdf, 0.0, 1.0);
}

} // namespace shiha::numerics
