#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tokennet/counts.hpp"
#include "tokennet/model.hpp"
#include "tokennet/ols.hpp"

namespace tokennet {

/// Per-round coefficient paths for one model variant: entry t is the fit on
/// the cumulative counts up to round t. Degenerate rounds carry NaN
/// coefficients and R^2 and are flagged, never silently dropped.
struct Trajectory {
    ModelVariant variant = ModelVariant::Additive;
    std::vector<std::string> coef_names;
    int n_rounds = 0;
    std::vector<double> coefficients;      // [ (t-1) * n_coefficients + c ]
    std::vector<double> r_squared;         // one per round
    std::vector<std::uint8_t> degenerate;  // one per round

    int n_coefficients() const { return static_cast<int>(coef_names.size()); }
    double coefficient(int t, int c) const {
        return coefficients[static_cast<std::size_t>(t - 1) * coef_names.size() +
                            static_cast<std::size_t>(c)];
    }
    bool is_degenerate(int t) const { return degenerate[static_cast<std::size_t>(t - 1)] != 0; }
};

/// Fits the variant on the i != j pair table at round t. Equivalent to
/// ols_fit(design_matrix(pair_table(counts, t, false), variant)) but computed
/// straight from the counts tensor; the arithmetic is identical because all
/// sums involved are exact in double precision. Throws RoundOutOfRange and
/// propagates DimensionMismatch for games too small to fit the variant.
FitResult fit_at_round(const CumulativeCounts& counts, ModelVariant variant, int t,
                       double tol = kDefaultRcondTol);

/// fit_at_round at every t = 1..n_rounds.
Trajectory fit_trajectory(const CumulativeCounts& counts, ModelVariant variant,
                          double tol = kDefaultRcondTol);

}  // namespace tokennet
