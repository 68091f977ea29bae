#include "shiha/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace shiha::estimation {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct NMOut {
    std::vector<double> x;
    double f = kInf;
    bool converged = false;
};

// Nelder-Mead with standard coefficients (reflect 1, expand 2,
// contract 0.5, shrink 0.5); converges on simplex infinity-diameter.
NMOut nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                  const std::vector<double>& x0, double step, double diam_tol,
                  int max_iter) {
    const int d = static_cast<int>(x0.size());
    std::vector<std::vector<double>> xs(d + 1, x0);
    std::vector<double> fs(d + 1);
    for (int i = 0; i < d; ++i) xs[i + 1][i] += step;
    for (int i = 0; i <= d; ++i) fs[i] = f(xs[i]);

    std::vector<int> order(d + 1);
    auto sort_order = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (fs[a] != fs[b]) return fs[a] < fs[b];
            return lex_less(xs[a], xs[b]);
        });
    };

    NMOut out;
    for (int iter = 0; iter < max_iter; ++iter) {
        sort_order();
        const int best = order[0], worst = order[d], second = order[d - 1];

        double diam = 0.0;
        double scale = 1.0;
        for (int j = 0; j < d; ++j)
            scale = std::max(scale, std::fabs(xs[best][j]));
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j < d; ++j)
                diam = std::max(diam, std::fabs(xs[i][j] - xs[best][j]));
        if (diam <= diam_tol * scale) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (int i = 0; i <= d; ++i)
            if (i != worst)
                for (int j = 0; j < d; ++j) centroid[j] += xs[i][j];
        for (double& c : centroid) c /= d;

        auto blend = [&](double coef) {
            std::vector<double> x(d);
            for (int j = 0; j < d; ++j)
                x[j] = centroid[j] + coef * (xs[worst][j] - centroid[j]);
            return x;
        };

        std::vector<double> xr = blend(-1.0);
        const double fr = f(xr);
        if (fr < fs[best]) {
            std::vector<double> xe = blend(-2.0);
            const double fe = f(xe);
            if (fe < fr) {
                xs[worst] = std::move(xe);
                fs[worst] = fe;
            } else {
                xs[worst] = std::move(xr);
                fs[worst] = fr;
            }
        } else if (fr < fs[second]) {
            xs[worst] = std::move(xr);
            fs[worst] = fr;
        } else {
            const bool outside = fr < fs[worst];
            std::vector<double> xc = blend(outside ? -0.5 : 0.5);
            const double fc = f(xc);
            if (fc < (outside ? fr : fs[worst])) {
                xs[worst] = std::move(xc);
                fs[worst] = fc;
            } else {
                for (int i = 0; i <= d; ++i) {
                    if (i == best) continue;
                    for (int j = 0; j < d; ++j)
                        xs[i][j] = xs[best][j] + 0.5 * (xs[i][j] - xs[best][j]);
                    fs[i] = f(xs[i]);
                }
            }
        }
    }
    sort_order();
    out.x = xs[order[0]];
    out.f = fs[order[0]];
    return out;
}

} // namespace

double log_likelihood(const competitors::ModelSpec& m, const std::vector<double>& data) {
    using competitors::Family;
    if (data.empty())
        throw std::invalid_argument("log_likelihood: data must be non-empty");

    if (m.family == Family::SHIHA) {
        if (m.params.size() != 2)
            throw std::invalid_argument("log_likelihood: wrong parameter count");
        const double w = m.params[0], e = m.params[1];
        if (!(w > 0.0) || !(e >= 0.0) || !std::isfinite(w) || !std::isfinite(e))
            throw std::domain_error("log_likelihood: invalid shiha parameters");
        const double e2 = 2.0 * e, we8 = 8.0 * w * e;
        double s = 0.0;
        for (double y : data) {
            if (y < 0.0) return -kInf;
            const double ex = std::exp(-w * y);
            s += std::log(w + (e2 + we8 * y) * ex) - w * y;
        }
        const double n = static_cast<double>(data.size());
        s += n * (std::log(w) - std::log(w + 3.0 * e));
        return std::isfinite(s) ? s : -kInf;
    }

    double s = 0.0;
    for (double y : data) {
        const double lp = competitors::model_log_pdf(m, y);
        if (!std::isfinite(lp)) return -kInf;
        s += lp;
    }
    return std::isfinite(s) ? s : -kInf;
}

FitResult fit_mle(competitors::Family family, const std::vector<double>& data,
                  const FitOptions& opts) {
    using competitors::Family;
    if (data.empty())
        throw std::invalid_argument("fit_mle: data must be non-empty");
    for (double y : data)
        if (!(y > 0.0) || !std::isfinite(y))
            throw std::invalid_argument("fit_mle: data must be positive and finite");

    const int k = competitors::param_count(family);
    const competitors::ParamBounds bounds = competitors::param_bounds(family);
    std::vector<double> zlo(k), zhi(k);
    for (int j = 0; j < k; ++j) {
        zlo[j] = std::log(bounds.lower[j]);
        zhi[j] = std::log(bounds.upper[j]);
    }

    auto clamp_params = [&](const std::vector<double>& z) {
        std::vector<double> th(k);
        for (int j = 0; j < k; ++j)
            th[j] = std::clamp(std::exp(z[j]), bounds.lower[j], bounds.upper[j]);
        return th;
    };

    competitors::ModelSpec scratch{family, std::vector<double>(k)};
    auto objective = [&](const std::vector<double>& z) {
        double pen = 0.0;
        for (int j = 0; j < k; ++j) {
            const double lo_ex = zlo[j] - z[j];
            const double hi_ex = z[j] - zhi[j];
            if (lo_ex > 0.0) pen += lo_ex * lo_ex;
            if (hi_ex > 0.0) pen += hi_ex * hi_ex;
        }
        scratch.params = clamp_params(z);
        const double ll = log_likelihood(scratch, data);
        return -ll + 100.0 * pen;
    };

    const double mean =
        std::accumulate(data.begin(), data.end(), 0.0) / static_cast<double>(data.size());
    const double w_base = 1.0 / mean;
    static constexpr double kOmegaScales[] = {0.25, 1.0, 4.0};
    static constexpr double kOtherGrid[] = {0.1, 1.0, 10.0};

    std::vector<std::vector<double>> starts;
    for (double ws : kOmegaScales) {
        std::vector<double> s0(k);
        s0[0] = std::clamp(w_base * ws, bounds.lower[0], bounds.upper[0]);
        if (k == 1) {
            starts.push_back(s0);
        } else if (k == 2) {
            for (double g : kOtherGrid) {
                s0[1] = g;
                starts.push_back(s0);
            }
        } else {
            for (double g1 : kOtherGrid)
                for (double g2 : kOtherGrid) {
                    s0[1] = g1;
                    s0[2] = g2;
                    starts.push_back(s0);
                }
        }
    }

    bool have_best = false, any_converged = false;
    NMOut best;
    for (const auto& s0 : starts) {
        std::vector<double> z0(k);
        for (int j = 0; j < k; ++j) z0[j] = std::log(s0[j]);
        NMOut r = nelder_mead(objective, z0, opts.step, opts.diam_tol, opts.max_iter);
        if (!std::isfinite(r.f)) continue;
        any_converged = any_converged || r.converged;
        const bool better =
            !have_best || r.f < best.f || (r.f == best.f && lex_less(r.x, best.x));
        if (better) {
            best = std::move(r);
            have_best = true;
        }
    }

    FitResult out;
    out.n = static_cast<int>(data.size());
    out.k = k;
    if (!have_best) {
        out.model = {family, std::vector<double>(k, std::numeric_limits<double>::quiet_NaN())};
        out.log_lik = -kInf;
        throw FitError("fit_mle: likelihood not finite at any start", out);
    }

    out.model = {family, clamp_params(best.x)};
    out.converged = best.converged;
    out.at_boundary.resize(k);
    for (int j = 0; j < k; ++j) {
        // estimates within boundary_tol of a bound are reported exactly
        // at the bound (optimizer dust below the tolerance is not a
        // meaningful interior estimate)
        double& th = out.model.params[j];
        const bool at_lo =
            std::fabs(th - bounds.lower[j]) <= opts.boundary_tol * std::max(1.0, bounds.lower[j]);
        const bool at_hi =
            std::fabs(th - bounds.upper[j]) <= opts.boundary_tol * std::max(1.0, bounds.upper[j]);
        if (at_lo) th = bounds.lower[j];
        if (at_hi) th = bounds.upper[j];
        out.at_boundary[j] = at_lo || at_hi;
    }
    out.log_lik = log_likelihood(out.model, data);
    out.aic = 2.0 * k - 2.0 * out.log_lik;
    out.bic = k * std::log(static_cast<double>(out.n)) - 2.0 * out.log_lik;
    if (!out.converged && !any_converged)
        throw FitError("fit_mle: no start converged", out);
    return out;
}

} // namespace shiha::estimation
