#include "tokennet/ols.hpp"

#include <algorithm>
#include <cmath>

namespace tokennet {

double FitResult::coefficient(std::string_view name) const {
    for (std::size_t c = 0; c < coef_names.size(); ++c)
        if (coef_names[c] == name)
            return degenerate ? std::numeric_limits<double>::quiet_NaN() : coefficients[c];
    throw UnknownCoefficient(std::string(name));
}

namespace detail {

bool solve_spd(int p, std::span<const double> gram, std::span<const double> rhs,
               std::span<double> solution, double tol) {
    // Cholesky factorization G = L L^T, lower triangle of `factor`.
    std::vector<double> factor(gram.begin(), gram.end());
    for (int k = 0; k < p; ++k) {
        double pivot = factor[static_cast<std::size_t>(k) * p + k];
        for (int m = 0; m < k; ++m) {
            const double l = factor[static_cast<std::size_t>(k) * p + m];
            pivot -= l * l;
        }
        if (!(pivot > 0.0) || !std::isfinite(pivot)) return false;
        const double diag = std::sqrt(pivot);
        factor[static_cast<std::size_t>(k) * p + k] = diag;
        for (int r = k + 1; r < p; ++r) {
            double value = factor[static_cast<std::size_t>(r) * p + k];
            for (int m = 0; m < k; ++m)
                value -= factor[static_cast<std::size_t>(r) * p + m] *
                         factor[static_cast<std::size_t>(k) * p + m];
            factor[static_cast<std::size_t>(r) * p + k] = value / diag;
        }
    }

    auto solve_with_factor = [&](std::span<const double> b, std::span<double> out) {
        // L z = b (forward), then L^T out = z (backward).
        for (int r = 0; r < p; ++r) {
            double value = b[static_cast<std::size_t>(r)];
            for (int m = 0; m < r; ++m)
                value -= factor[static_cast<std::size_t>(r) * p + m] * out[static_cast<std::size_t>(m)];
            out[static_cast<std::size_t>(r)] = value / factor[static_cast<std::size_t>(r) * p + r];
        }
        for (int r = p - 1; r >= 0; --r) {
            double value = out[static_cast<std::size_t>(r)];
            for (int m = r + 1; m < p; ++m)
                value -= factor[static_cast<std::size_t>(m) * p + r] * out[static_cast<std::size_t>(m)];
            out[static_cast<std::size_t>(r)] = value / factor[static_cast<std::size_t>(r) * p + r];
        }
    };

    // Reciprocal condition estimate in the 1-norm; p is tiny, so the explicit
    // inverse is affordable.
    double norm_gram = 0.0;
    for (int c = 0; c < p; ++c) {
        double column_sum = 0.0;
        for (int r = 0; r < p; ++r) column_sum += std::abs(gram[static_cast<std::size_t>(r) * p + c]);
        norm_gram = std::max(norm_gram, column_sum);
    }
    std::vector<double> unit(static_cast<std::size_t>(p), 0.0);
    std::vector<double> inverse_column(static_cast<std::size_t>(p), 0.0);
    double norm_inverse = 0.0;
    for (int c = 0; c < p; ++c) {
        std::fill(unit.begin(), unit.end(), 0.0);
        unit[static_cast<std::size_t>(c)] = 1.0;
        solve_with_factor(unit, inverse_column);
        double column_sum = 0.0;
        for (int r = 0; r < p; ++r) column_sum += std::abs(inverse_column[static_cast<std::size_t>(r)]);
        if (!std::isfinite(column_sum)) return false;
        norm_inverse = std::max(norm_inverse, column_sum);
    }
    const double rcond = 1.0 / (norm_gram * norm_inverse);
    if (!(rcond >= tol)) return false;

    solve_with_factor(rhs, solution);
    for (int r = 0; r < p; ++r)
        if (!std::isfinite(solution[static_cast<std::size_t>(r)])) return false;
    return true;
}

}  // namespace detail

FitResult ols_fit(const Matrix& x, std::span<const double> y, double tol) {
    const int rows = x.rows;
    const int cols = x.cols;
    if (rows <= 0 || cols <= 0) throw DimensionMismatch("ols_fit: empty design matrix");
    if (static_cast<std::size_t>(rows) != y.size())
        throw DimensionMismatch("ols_fit: " + std::to_string(rows) + " rows vs " +
                                std::to_string(y.size()) + " responses");
    if (rows < cols)
        throw DimensionMismatch("ols_fit: fewer rows (" + std::to_string(rows) +
                                ") than columns (" + std::to_string(cols) + ")");

    FitResult fit;
    fit.n_obs = rows;

    // Normal equations. For the integer-valued token counts used by the
    // pairwise model these sums are exact in double precision.
    std::vector<double> gram(static_cast<std::size_t>(cols) * cols, 0.0);
    std::vector<double> xty(static_cast<std::size_t>(cols), 0.0);
    double sum_y = 0.0;
    double sum_yy = 0.0;
    for (int r = 0; r < rows; ++r) {
        const double response = y[static_cast<std::size_t>(r)];
        sum_y += response;
        sum_yy += response * response;
        for (int a = 0; a < cols; ++a) {
            const double xa = x.at(r, a);
            xty[static_cast<std::size_t>(a)] += xa * response;
            for (int b = a; b < cols; ++b)
                gram[static_cast<std::size_t>(a) * cols + b] += xa * x.at(r, b);
        }
    }
    for (int a = 0; a < cols; ++a)
        for (int b = 0; b < a; ++b)
            gram[static_cast<std::size_t>(a) * cols + b] = gram[static_cast<std::size_t>(b) * cols + a];

    const double sst = sum_yy - (sum_y * sum_y) / static_cast<double>(rows);

    std::vector<double> beta(static_cast<std::size_t>(cols), 0.0);
    const bool solved = detail::solve_spd(cols, gram, xty, beta, tol);
    if (!solved || !(sst > 0.0)) {
        fit.degenerate = true;
        return fit;
    }

    fit.coefficients = std::move(beta);
    fit.residuals.resize(static_cast<std::size_t>(rows));
    double ssr = 0.0;
    for (int r = 0; r < rows; ++r) {
        double predicted = 0.0;
        for (int c = 0; c < cols; ++c)
            predicted += fit.coefficients[static_cast<std::size_t>(c)] * x.at(r, c);
        const double residual = y[static_cast<std::size_t>(r)] - predicted;
        fit.residuals[static_cast<std::size_t>(r)] = residual;
        ssr += residual * residual;
    }
    fit.r_squared = 1.0 - ssr / sst;
    return fit;
}

FitResult ols_fit(const DesignMatrix& design, double tol) {
    FitResult fit = ols_fit(design.x, design.response, tol);
    fit.coef_names = design.column_names;
    return fit;
}

}  // namespace tokennet
