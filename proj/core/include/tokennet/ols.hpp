#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tokennet/model.hpp"

namespace tokennet {

/// Default lower bound on the Gram matrix's reciprocal condition estimate;
/// below it the fit is declared degenerate instead of solved.
inline constexpr double kDefaultRcondTol = 1e-12;

/// One least-squares fit. When `degenerate` is set (singular or
/// near-singular Gram matrix, or constant response making R^2 undefined),
/// coefficients and residuals are left empty and r_squared is NaN --
/// undefined values are never silently invented.
struct FitResult {
    std::vector<std::string> coef_names;
    std::vector<double> coefficients;  // empty when degenerate
    double r_squared = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> residuals;     // empty when degenerate; row order of the input
    int n_obs = 0;
    bool degenerate = false;

    /// Named lookup; throws UnknownCoefficient. Degenerate fits return NaN.
    double coefficient(std::string_view name) const;
};

/// Exact least squares via the normal equations with a symmetric
/// positive-definite (Cholesky) solve; suitable for the small column counts
/// used here. Throws DimensionMismatch when rows < columns or X and y
/// disagree. Flags the fit degenerate when the reciprocal condition estimate
/// of X^T X falls below tol or the response is constant.
FitResult ols_fit(const Matrix& x, std::span<const double> y, double tol = kDefaultRcondTol);

/// Convenience overload carrying the design's column names into the result.
FitResult ols_fit(const DesignMatrix& design, double tol = kDefaultRcondTol);

namespace detail {

/// Solves gram * solution = rhs for a symmetric positive-definite matrix
/// (row-major p x p). Returns false when the matrix is numerically singular:
/// nonpositive/nonfinite Cholesky pivot, or reciprocal condition estimate
/// (1-norm, via the explicit inverse) below tol.
bool solve_spd(int p, std::span<const double> gram, std::span<const double> rhs,
               std::span<double> solution, double tol);

}  // namespace detail

}  // namespace tokennet
