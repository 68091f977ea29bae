#pragma once
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace shiha::numerics {

struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    int max_iter = 200;
};

// Principal branch of the Lambert W function for x >= 0.
// Halley iteration seeded with log1p(x); residual |w*exp(w) - x| is
// driven below 1e-12 * max(1, x).
double lambert_w0(double x);

// Survival function of the Kolmogorov-Smirnov statistic D_n.
// n < 100 uses the exact Marsaglia-Tsang-Wang matrix evaluation of
// P(D_n < d); otherwise the asymptotic form at lambda = sqrt(n) * d.
double kolmogorov_sf(double d, int n);

// Asymptotic K-S tail Q(lambda) = 2 * sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
// Small lambda is evaluated through the equivalent theta-series form of
// the cdf, which converges fast where the direct sum loses accuracy.
double kolmogorov_asymptotic_sf(double lambda);

// Upper tail of the asymptotic Anderson-Darling distribution
// (Marsaglia & Marsaglia 2004 "adinf" approximation; the two branches
// are blended linearly over z in [1.6, 2.0] to keep the sf monotone
// across the junction).
double anderson_darling_sf(double a2);

// Brent's method on [lo, hi]; f(lo) and f(hi) must bracket a root.
// Returns x once |f(x)| <= abs_tol or the bracket has collapsed to
// abs_tol + rel_tol * |x|.  Throws std::invalid_argument for a bad
// bracket and std::runtime_error if max_iter is exhausted.
template <class F>
double find_root_bracketed(F&& f, double lo, double hi, const Tolerance& tol = {}) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (std::isnan(fa) || std::isnan(fb))
        throw std::invalid_argument("find_root_bracketed: f is NaN at an endpoint");
    if ((fa > 0.0 && fb > 0.0) || (fa < 0.0 && fb < 0.0))
        throw std::invalid_argument("find_root_bracketed: endpoints do not bracket a root");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 0.5 * (tol.abs_tol + tol.rel_tol * std::fabs(b));
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0 || std::fabs(fb) <= tol.abs_tol)
            return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d; d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        if (std::fabs(d) > tol1) b += d;
        else b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw std::runtime_error("find_root_bracketed: max_iter exceeded");
}

namespace detail {

template <class F>
double simpson(F& f, double a, double fa, double b, double fb, double& fm) {
    const double m = 0.5 * (a + b);
    fm = f(m);
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adapt(F& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double eps, int depth) {
    double fl, fr;
    const double left = simpson(f, a, fa, m, fm, fl);
    const double right = simpson(f, m, fm, b, fb, fr);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps || (b - a) < 1e-14 * (1.0 + std::fabs(a)))
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw std::runtime_error("integrate_adaptive: subdivision limit reached");
    return adapt(f, a, fa, m, fm, 0.5 * (a + m), fl, left, 0.5 * eps, depth - 1)
         + adapt(f, m, fm, b, fb, 0.5 * (m + b), fr, right, 0.5 * eps, depth - 1);
}

} // namespace detail

// Adaptive Simpson quadrature of f over the finite interval [a, b].
// Exact for polynomials up to cubic; throws std::runtime_error when the
// subdivision limit is hit before the local error bound is met.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol = 1e-10) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) { std::swap(a, b); sign = -1.0; }
    const double fa = f(a), fb = f(b);
    double fm;
    const double whole = detail::simpson(f, a, fa, b, fb, fm);
    return sign * detail::adapt(f, a, fa, b, fb, 0.5 * (a + b), fm, whole, tol, 64);
}

} // namespace shiha::numerics
