#pragma once
#include "shiha/competitors.hpp"

// Reference values used by the reproduction harness and acceptance
// checks.  Numbers are embedded exactly as printed in the source
// tables; known printing quirks are flagged, never silently edited.
namespace shiha::reference {

inline constexpr int kQuantileProbCount = 14;
inline constexpr int kQuantileParamCount = 4;
extern const double kQuantileProbs[kQuantileProbCount];
extern const double kQuantileParams[kQuantileParamCount][2];
extern const double kQuantiles[kQuantileProbCount][kQuantileParamCount];

inline constexpr int kMomentOmegaCount = 20;
inline constexpr int kMomentEtaCount = 3;
extern const double kMomentOmegas[kMomentOmegaCount];
extern const double kMomentEtas[kMomentEtaCount];
extern const double kMoments[kMomentOmegaCount][kMomentEtaCount][4];

inline constexpr int kDescOmegaCount = 25;
inline constexpr int kDescEtaCount = 4;
extern const double kDescOmegas[kDescOmegaCount];
extern const double kDescEtas[kDescEtaCount];
// variance, skewness, kurtosis
extern const double kDescriptors[kDescOmegaCount][kDescEtaCount][3];

struct SimCell {
    int n;
    double bias_omega, bias_eta, mse_omega, mse_eta;
    // the (omega=1, eta=1) block prints "400" where the design's row is
    // n=600; carried as n=600 with the typo flagged
    bool n_label_typo;
};
struct SimBlock {
    double omega, eta;
    SimCell cells[6];
};
inline constexpr int kSimBlockCount = 8;
extern const SimBlock kSimBlocks[kSimBlockCount];

inline constexpr int kDatasetCount = 4;
struct SummaryRow {
    const char* dataset;
    double min, q1, median, q3, max, mean, variance, skewness, kurtosis;
};
extern const SummaryRow kSummaryRows[kDatasetCount];

struct FitCell {
    competitors::Family family;
    int k;
    double est[3];
    double aic, bic, ad, ad_p, ks, ks_p;
};
struct FitTable {
    const char* dataset;
    FitCell rows[6];
};
extern const FitTable kFitTables[kDatasetCount];

} // namespace shiha::reference
