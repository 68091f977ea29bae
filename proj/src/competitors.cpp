#include "shiha/competitors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "shiha/numerics.hpp"

namespace shiha::competitors {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check(const ModelSpec& m) {
    if (static_cast<int>(m.params.size()) != param_count(m.family))
        throw std::invalid_argument("competitors: wrong parameter count for family");
    for (std::size_t i = 0; i < m.params.size(); ++i) {
        const double v = m.params[i];
        // the second shiha parameter may sit at zero (exponential submodel)
        const bool zero_ok = m.family == Family::SHIHA && i == 1;
        if (!std::isfinite(v) || (zero_ok ? v < 0.0 : !(v > 0.0)))
            throw std::domain_error("competitors: parameters must be positive and finite");
    }
}

// x-gamma upper tail factor u0 = (1 + w + w*y + w^2 y^2 / 2) e^{-w y} / (1 + w)
double xgamma_u0(double w, double y) {
    return (1.0 + w + w * y + 0.5 * w * w * y * y) * std::exp(-w * y) / (1.0 + w);
}

double xgamma_log_pdf(double w, double y) {
    return 2.0 * std::log(w) - std::log1p(w) + std::log1p(0.5 * w * y * y) - w * y;
}

// log(eta) / (eta - 1), continuous through eta = 1
double log_ratio(double eta) {
    const double d = eta - 1.0;
    if (std::fabs(d) < 1e-9) return 1.0 - 0.5 * d;
    return std::log(eta) / d;
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::SHIHA: return "shiha";
        case Family::APTXGD: return "aptxgd";
        case Family::PLD: return "pld";
        case Family::TPGLD: return "tpgld";
        case Family::CJD: return "cjd";
        case Family::AKD: return "akd";
    }
    throw std::logic_error("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "shiha") return Family::SHIHA;
    if (name == "aptxgd") return Family::APTXGD;
    if (name == "pld") return Family::PLD;
    if (name == "tpgld") return Family::TPGLD;
    if (name == "cjd") return Family::CJD;
    if (name == "akd") return Family::AKD;
    throw std::invalid_argument("unknown family name: " + name);
}

std::vector<std::string> param_names(Family f) {
    switch (f) {
        case Family::SHIHA:
        case Family::APTXGD:
        case Family::PLD: return {"omega", "eta"};
        case Family::TPGLD: return {"omega", "eta", "alpha"};
        case Family::CJD:
        case Family::AKD: return {"omega"};
    }
    throw std::logic_error("param_names: unknown family");
}

int param_count(Family f) {
    return static_cast<int>(param_names(f).size());
}

ParamBounds param_bounds(Family f) {
    const int k = param_count(f);
    ParamBounds b{std::vector<double>(k, 1e-4), std::vector<double>(k, 1e4)};
    if (f == Family::TPGLD) b.upper[2] = 1e3;
    return b;
}

double model_log_pdf(const ModelSpec& m, double y) {
    check(m);
    if (m.family == Family::SHIHA)
        return log_pdf(ShihaParams{m.params[0], m.params[1]}, y);
    if (y < 0.0 || !std::isfinite(y)) return kNegInf;

    switch (m.family) {
        case Family::APTXGD: {
            const double w = m.params[0], eta = m.params[1];
            const double base = xgamma_log_pdf(w, y);
            if (std::fabs(eta - 1.0) < 1e-12) return base;
            const double u0 = xgamma_u0(w, y);
            return std::log(log_ratio(eta)) + base + (1.0 - u0) * std::log(eta);
        }
        case Family::PLD: {
            const double w = m.params[0], eta = m.params[1];
            if (y == 0.0) {
                if (eta > 1.0) return kNegInf;
                if (eta < 1.0) return std::numeric_limits<double>::infinity();
                return 2.0 * std::log(w) - std::log1p(w);
            }
            const double ly = std::log(y);
            const double expo = eta * ly;
            if (expo > 700.0) return kNegInf;
            const double t = std::exp(expo);
            return std::log(eta) + 2.0 * std::log(w) - std::log1p(w) +
                   std::log1p(t) + (eta - 1.0) * ly - w * t;
        }
        case Family::TPGLD: {
            const double w = m.params[0], eta = m.params[1], alpha = m.params[2];
            if (y == 0.0) {
                if (alpha > 1.0) return kNegInf;
                if (alpha < 1.0) return std::numeric_limits<double>::infinity();
                return 2.0 * std::log(w) + std::log(eta) - std::log1p(w * eta);
            }
            const double ly = std::log(y);
            const double expo = alpha * ly;
            if (expo > 700.0) return kNegInf;
            const double t = std::exp(expo);
            return std::log(alpha) + 2.0 * std::log(w) + std::log(eta + t) +
                   (alpha - 1.0) * ly - std::log1p(w * eta) - w * t;
        }
        case Family::CJD: {
            const double w = m.params[0];
            return 2.0 * std::log(w) - std::log(w + 2.0) + std::log1p(w * y * y) - w * y;
        }
        case Family::AKD: {
            const double w = m.params[0];
            return 3.0 * std::log(w) - std::log(w * w + 2.0) + std::log1p(y * y) - w * y;
        }
        default:
            throw std::logic_error("model_log_pdf: unknown family");
    }
}

double model_pdf(const ModelSpec& m, double y) {
    check(m);
    if (m.family == Family::SHIHA)
        return pdf(ShihaParams{m.params[0], m.params[1]}, y);
    if (y < 0.0 || !std::isfinite(y)) return 0.0;
    return std::exp(model_log_pdf(m, y));
}

double model_cdf(const ModelSpec& m, double y) {
    check(m);
    if (m.family == Family::SHIHA)
        return cdf(ShihaParams{m.params[0], m.params[1]}, y);
    if (y <= 0.0) return 0.0;
    if (!std::isfinite(y)) return 1.0;

    switch (m.family) {
        case Family::APTXGD: {
            const double w = m.params[0], eta = m.params[1];
            const double f0 = 1.0 - xgamma_u0(w, y);
            if (std::fabs(eta - 1.0) < 1e-12) return f0;
            const double l = std::log(eta);
            if (std::fabs(eta - 1.0) < 1e-9)
                return f0 * (1.0 + 0.5 * l * (f0 - 1.0));
            return std::expm1(f0 * l) / (eta - 1.0);
        }
        case Family::PLD: {
            const double w = m.params[0], eta = m.params[1];
            const double expo = eta * std::log(y);
            if (expo > 700.0) return 1.0;
            const double t = std::exp(expo);
            return 1.0 - (1.0 + w * t / (1.0 + w)) * std::exp(-w * t);
        }
        case Family::TPGLD: {
            const double w = m.params[0], eta = m.params[1], alpha = m.params[2];
            const double expo = alpha * std::log(y);
            if (expo > 700.0) return 1.0;
            const double t = std::exp(expo);
            return 1.0 - (1.0 + w * eta + w * t) / (1.0 + w * eta) * std::exp(-w * t);
        }
        case Family::CJD: {
            const double w = m.params[0];
            return 1.0 - (1.0 + w * y * (w * y + 2.0) / (w + 2.0)) * std::exp(-w * y);
        }
        case Family::AKD: {
            const double w = m.params[0];
            return 1.0 - (1.0 + w * y * (w * y + 2.0) / (w * w + 2.0)) * std::exp(-w * y);
        }
        default:
            throw std::logic_error("model_cdf: unknown family");
    }
}

double model_quantile(const ModelSpec& m, double prob) {
    check(m);
    if (m.family == Family::SHIHA)
        return quantile(ShihaParams{m.params[0], m.params[1]}, prob);
    if (!(prob >= 0.0) || prob >= 1.0)
        throw std::domain_error("model_quantile: probability must lie in [0, 1)");
    if (prob == 0.0) return 0.0;

    double hi = 1.0;
    for (int i = 0; i < 200 && model_cdf(m, hi) < prob; ++i) hi *= 2.0;
    double lo = hi > 1.0 ? hi / 2.0 : 0.0;
    while (lo > 0.0 && model_cdf(m, lo) > prob) lo /= 2.0;
    auto g = [&](double y) { return model_cdf(m, y) - prob; };
    return numerics::find_root_bracketed(g, lo, hi,
                                         numerics::Tolerance{1e-13, 1e-14, 200});
}

} // namespace shiha::competitors
