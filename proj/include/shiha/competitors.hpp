#pragma once
#include <string>
#include <vector>

#include "shiha/distribution.hpp"

namespace shiha::competitors {

enum class Family { SHIHA, APTXGD, PLD, TPGLD, CJD, AKD };

// A concrete fitted/parameterized model: the family plus its parameter
// vector in canonical order.
//   SHIHA  (omega, eta)        APTXGD (omega, eta)     PLD (omega, eta)
//   TPGLD  (omega, eta, alpha) CJD    (omega)          AKD (omega)
struct ModelSpec {
    Family family;
    std::vector<double> params;
};

struct ParamBounds {
    std::vector<double> lower;
    std::vector<double> upper;
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);
std::vector<std::string> param_names(Family f);
int param_count(Family f);
ParamBounds param_bounds(Family f);

double model_pdf(const ModelSpec& m, double y);
double model_log_pdf(const ModelSpec& m, double y);
double model_cdf(const ModelSpec& m, double y);

// Inverse cdf by bracketed root solve on the model cdf.
double model_quantile(const ModelSpec& m, double prob);

} // namespace shiha::competitors
