#include "tokennet/fit.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>

namespace tokennet {

namespace {

constexpr int kMaxBuiltinColumns = 4;

struct PairSums {
    std::int64_t rows = 0;
    std::int64_t reciprocal = 0;        // sum r
    std::int64_t cross = 0;             // sum g
    std::int64_t cross_reciprocal = 0;  // sum g*r
    std::int64_t reciprocal_sq = 0;     // sum r^2
    std::int64_t cross_reciprocal_sq = 0;  // sum g*r^2
    std::int64_t response = 0;          // sum y
    std::int64_t response_sq = 0;       // sum y^2
    std::int64_t response_reciprocal = 0;  // sum y*r
    std::int64_t response_cross = 0;       // sum y*g
    std::int64_t response_cross_reciprocal = 0;  // sum y*g*r
};

PairSums accumulate(const CumulativeCounts& counts, int t) {
    PairSums s;
    const int n = counts.n_players();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const std::int64_t y = counts.y(i, j, t);
            const std::int64_t r = counts.y(j, i, t);
            const std::int64_t g = counts.g(i, j);
            ++s.rows;
            s.reciprocal += r;
            s.cross += g;
            s.cross_reciprocal += g * r;
            s.reciprocal_sq += r * r;
            s.cross_reciprocal_sq += g * r * r;
            s.response += y;
            s.response_sq += y * y;
            s.response_reciprocal += y * r;
            s.response_cross += y * g;
            s.response_cross_reciprocal += y * g * r;
        }
    }
    return s;
}

// Gram matrix and X^T y for the variant's column order (intercept, r, g, g*r),
// assembled from the exact integer sums.
void assemble_normal_equations(const PairSums& s, ModelVariant variant, int p,
                               std::array<double, kMaxBuiltinColumns * kMaxBuiltinColumns>& gram,
                               std::array<double, kMaxBuiltinColumns>& xty) {
    const double m = static_cast<double>(s.rows);
    const double sr = static_cast<double>(s.reciprocal);
    const double sg = static_cast<double>(s.cross);
    const double sgr = static_cast<double>(s.cross_reciprocal);
    const double srr = static_cast<double>(s.reciprocal_sq);
    const double sgrr = static_cast<double>(s.cross_reciprocal_sq);
    const double sy = static_cast<double>(s.response);
    const double syr = static_cast<double>(s.response_reciprocal);
    const double syg = static_cast<double>(s.response_cross);
    const double sygr = static_cast<double>(s.response_cross_reciprocal);

    auto gram_at = [&gram, p](int a, int b) -> double& {
        return gram[static_cast<std::size_t>(a) * p + b];
    };
    switch (variant) {
        case ModelVariant::Reciprocity:
            gram_at(0, 0) = m;  gram_at(0, 1) = sr;
            gram_at(1, 0) = sr; gram_at(1, 1) = srr;
            xty = {sy, syr, 0.0, 0.0};
            break;
        case ModelVariant::Group:
            gram_at(0, 0) = m;  gram_at(0, 1) = sg;
            gram_at(1, 0) = sg; gram_at(1, 1) = sg;
            xty = {sy, syg, 0.0, 0.0};
            break;
        case ModelVariant::Additive:
            gram_at(0, 0) = m;   gram_at(0, 1) = sr;  gram_at(0, 2) = sg;
            gram_at(1, 0) = sr;  gram_at(1, 1) = srr; gram_at(1, 2) = sgr;
            gram_at(2, 0) = sg;  gram_at(2, 1) = sgr; gram_at(2, 2) = sg;
            xty = {sy, syr, syg, 0.0};
            break;
        case ModelVariant::Interaction:
            gram_at(0, 0) = m;    gram_at(0, 1) = sr;   gram_at(0, 2) = sg;  gram_at(0, 3) = sgr;
            gram_at(1, 0) = sr;   gram_at(1, 1) = srr;  gram_at(1, 2) = sgr; gram_at(1, 3) = sgrr;
            gram_at(2, 0) = sg;   gram_at(2, 1) = sgr;  gram_at(2, 2) = sg;  gram_at(2, 3) = sgr;
            gram_at(3, 0) = sgr;  gram_at(3, 1) = sgrr; gram_at(3, 2) = sgr; gram_at(3, 3) = sgrr;
            xty = {sy, syr, syg, sygr};
            break;
    }
}

struct CompactFit {
    std::array<double, kMaxBuiltinColumns> coefficients{};
    double r_squared = std::numeric_limits<double>::quiet_NaN();
    bool degenerate = true;
};

// Core of fit_at_round / fit_trajectory. Mirrors ols_fit's arithmetic exactly:
// same normal equations, same SST expression, residuals accumulated in pair
// table row order with column-ascending prediction sums.
CompactFit fit_round_compact(const CumulativeCounts& counts, ModelVariant variant, int t,
                             double tol, std::vector<double>* residuals_out) {
    const int p = coefficient_count(variant);
    const PairSums sums = accumulate(counts, t);
    if (sums.rows < p)
        throw DimensionMismatch("fit_at_round: fewer pair rows (" + std::to_string(sums.rows) +
                                ") than coefficients (" + std::to_string(p) + ")");

    std::array<double, kMaxBuiltinColumns * kMaxBuiltinColumns> gram{};
    std::array<double, kMaxBuiltinColumns> xty{};
    assemble_normal_equations(sums, variant, p, gram, xty);

    CompactFit fit;
    const double sum_y = static_cast<double>(sums.response);
    const double sst = static_cast<double>(sums.response_sq) -
                       (sum_y * sum_y) / static_cast<double>(sums.rows);

    std::array<double, kMaxBuiltinColumns> beta{};
    const bool solved = detail::solve_spd(p, std::span<const double>(gram.data(), gram.size()),
                                          std::span<const double>(xty.data(), p),
                                          std::span<double>(beta.data(), p), tol);
    if (!solved || !(sst > 0.0)) return fit;

    const bool uses_reciprocity = variant != ModelVariant::Group;
    const bool uses_group = variant != ModelVariant::Reciprocity;
    const bool uses_interaction = variant == ModelVariant::Interaction;

    const int n = counts.n_players();
    if (residuals_out) residuals_out->resize(static_cast<std::size_t>(sums.rows));
    double ssr = 0.0;
    std::size_t row = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const double reciprocal = static_cast<double>(counts.y(j, i, t));
            const double cross = static_cast<double>(counts.g(i, j));
            double predicted = beta[0] * 1.0;
            int c = 1;
            if (uses_reciprocity) predicted += beta[static_cast<std::size_t>(c++)] * reciprocal;
            if (uses_group) predicted += beta[static_cast<std::size_t>(c++)] * cross;
            if (uses_interaction)
                predicted += beta[static_cast<std::size_t>(c++)] * (cross * reciprocal);
            const double residual = static_cast<double>(counts.y(i, j, t)) - predicted;
            if (residuals_out) (*residuals_out)[row] = residual;
            ssr += residual * residual;
            ++row;
        }
    }

    fit.coefficients = beta;
    fit.r_squared = 1.0 - ssr / sst;
    fit.degenerate = false;
    return fit;
}

}  // namespace

FitResult fit_at_round(const CumulativeCounts& counts, ModelVariant variant, int t, double tol) {
    if (t < 1 || t > counts.n_rounds()) throw RoundOutOfRange(t, counts.n_rounds());

    FitResult result;
    result.coef_names = coefficient_names(variant);
    result.n_obs = counts.n_players() * (counts.n_players() - 1);

    std::vector<double> residuals;
    const CompactFit fit = fit_round_compact(counts, variant, t, tol, &residuals);
    result.degenerate = fit.degenerate;
    if (!fit.degenerate) {
        result.coefficients.assign(fit.coefficients.begin(),
                                   fit.coefficients.begin() + coefficient_count(variant));
        result.residuals = std::move(residuals);
        result.r_squared = fit.r_squared;
    }
    return result;
}

Trajectory fit_trajectory(const CumulativeCounts& counts, ModelVariant variant, double tol) {
    Trajectory trajectory;
    trajectory.variant = variant;
    trajectory.coef_names = coefficient_names(variant);
    trajectory.n_rounds = counts.n_rounds();
    const int p = trajectory.n_coefficients();
    trajectory.coefficients.assign(static_cast<std::size_t>(trajectory.n_rounds) * p,
                                   std::numeric_limits<double>::quiet_NaN());
    trajectory.r_squared.assign(static_cast<std::size_t>(trajectory.n_rounds),
                                std::numeric_limits<double>::quiet_NaN());
    trajectory.degenerate.assign(static_cast<std::size_t>(trajectory.n_rounds), 0);

    for (int t = 1; t <= trajectory.n_rounds; ++t) {
        const CompactFit fit = fit_round_compact(counts, variant, t, tol, nullptr);
        if (fit.degenerate) {
            trajectory.degenerate[static_cast<std::size_t>(t - 1)] = 1;
            continue;
        }
        for (int c = 0; c < p; ++c)
            trajectory.coefficients[static_cast<std::size_t>(t - 1) * p + c] =
                fit.coefficients[static_cast<std::size_t>(c)];
        trajectory.r_squared[static_cast<std::size_t>(t - 1)] = fit.r_squared;
    }
    return trajectory;
}

}  // namespace tokennet
