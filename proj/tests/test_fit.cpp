#include <doctest.h>

#include <cmath>

#include "tokennet/fit.hpp"
#include "tokennet/simulate.hpp"
#include "support/synthetic.hpp"

using namespace tokennet;

namespace {

CumulativeCounts null_counts(std::uint64_t master, std::uint64_t index, int n = 14, int t = 40) {
    const GameConfig config = synthetic::balanced_config(n, t);
    return cumulative_counts(validate_log(config, simulate_null_game(config, SeedSpec{master, index})));
}

}  // namespace

TEST_CASE("fit_at_round equals the compositional pipeline") {
    const CumulativeCounts counts = null_counts(404, 2);
    for (ModelVariant variant : {ModelVariant::Reciprocity, ModelVariant::Group,
                                 ModelVariant::Additive, ModelVariant::Interaction}) {
        for (int t : {1, 7, 25, 40}) {
            const FitResult fused = fit_at_round(counts, variant, t);
            const FitResult composed =
                ols_fit(design_matrix(pair_table(counts, t, false), variant));
            REQUIRE(fused.degenerate == composed.degenerate);
            if (fused.degenerate) continue;
            REQUIRE(fused.coefficients.size() == composed.coefficients.size());
            for (std::size_t c = 0; c < fused.coefficients.size(); ++c)
                CHECK(fused.coefficients[c] == composed.coefficients[c]);  // bit-identical
            CHECK(fused.r_squared == composed.r_squared);
            REQUIRE(fused.residuals.size() == composed.residuals.size());
            for (std::size_t r = 0; r < fused.residuals.size(); ++r)
                CHECK(fused.residuals[r] == composed.residuals[r]);
        }
    }
}

TEST_CASE("trajectory has one entry per round and flags degeneracy") {
    const GameConfig config = synthetic::balanced_config();
    const CumulativeCounts counts = null_counts(7, 0);
    const Trajectory trajectory = fit_trajectory(counts, ModelVariant::Additive);
    CHECK(trajectory.n_rounds == 40);
    CHECK(trajectory.r_squared.size() == 40);
    CHECK(trajectory.degenerate.size() == 40);
    for (int t = 1; t <= 40; ++t) {
        if (trajectory.is_degenerate(t)) {
            CHECK(std::isnan(trajectory.coefficient(t, 0)));
        } else {
            for (int c = 0; c < trajectory.n_coefficients(); ++c)
                CHECK(std::isfinite(trajectory.coefficient(t, c)));
            CHECK(std::isfinite(trajectory.r_squared[static_cast<std::size_t>(t - 1)]));
        }
    }

    // All-self giving: the modelling response is identically zero, so every
    // round must be flagged rather than silently NaN.
    const ValidatedGame self_game =
        validate_log(config, synthetic::self_only_game(config));
    const Trajectory degenerate_trajectory =
        fit_trajectory(cumulative_counts(self_game), ModelVariant::Additive);
    for (int t = 1; t <= 40; ++t) CHECK(degenerate_trajectory.is_degenerate(t));
}

TEST_CASE("uniform-deterministic giving has no group signal") {
    const GameConfig config = synthetic::balanced_config(14, 39);  // 3 full 13-cycles
    const CumulativeCounts counts =
        cumulative_counts(validate_log(config, synthetic::round_robin_game(config)));
    const FitResult fit = fit_at_round(counts, ModelVariant::Group, 39);
    if (!fit.degenerate) CHECK(std::abs(fit.coefficient("group")) < 1e-9);

    // With a partial cycle the counts differ by rounding only.
    const GameConfig partial = synthetic::balanced_config(14, 40);
    const CumulativeCounts partial_counts =
        cumulative_counts(validate_log(partial, synthetic::round_robin_game(partial)));
    const FitResult partial_fit = fit_at_round(partial_counts, ModelVariant::Additive, 40);
    REQUIRE(!partial_fit.degenerate);
    CHECK(std::abs(partial_fit.coefficient("group")) < 0.2);
}

TEST_CASE("nested variants order R^2") {
    for (std::uint64_t k = 0; k < 20; ++k) {
        const CumulativeCounts counts = null_counts(909, k);
        const double r2_reciprocity =
            fit_at_round(counts, ModelVariant::Reciprocity, 40).r_squared;
        const double r2_group = fit_at_round(counts, ModelVariant::Group, 40).r_squared;
        const double r2_additive = fit_at_round(counts, ModelVariant::Additive, 40).r_squared;
        const double r2_interaction =
            fit_at_round(counts, ModelVariant::Interaction, 40).r_squared;
        CHECK(r2_interaction >= r2_additive - 1e-10);
        CHECK(r2_additive >= r2_reciprocity - 1e-10);
        CHECK(r2_additive >= r2_group - 1e-10);
    }
}

TEST_CASE("R^2 grows over time for norm-driven behaviour") {
    const GameConfig config = synthetic::balanced_config();
    double early = 0.0;
    double late = 0.0;
    for (std::uint64_t k = 0; k < 5; ++k) {
        const CumulativeCounts counts = cumulative_counts(
            validate_log(config, synthetic::biased_game(config, 0.75, SeedSpec{61, k})));
        const Trajectory trajectory = fit_trajectory(counts, ModelVariant::Additive);
        for (int t = 2; t <= 20; ++t) early += trajectory.r_squared[static_cast<std::size_t>(t - 1)];
        for (int t = 21; t <= 40; ++t) late += trajectory.r_squared[static_cast<std::size_t>(t - 1)];
    }
    CHECK(late > early);
}

TEST_CASE("self-giving rows are reproduced exactly by the forced reduction") {
    // Fitting only i != j rows loses nothing: forcing the self-row intercept
    // offset to -intercept and the self slope offset to 1 - reciprocity makes
    // the extended model reproduce every diagonal count exactly. Solving the
    // two offsets from any two distinct diagonal counts gives (0, 1) in
    // integer arithmetic, so the check is exact.
    const GameConfig config = synthetic::balanced_config();
    for (std::uint64_t k = 0; k < 10; ++k) {
        const CumulativeCounts counts = null_counts(313, k);
        const FitResult fit = fit_at_round(counts, ModelVariant::Additive, 40);
        REQUIRE(!fit.degenerate);

        const double alpha = fit.coefficient("intercept");
        const double rho = fit.coefficient("reciprocity");
        const double psi = -alpha;
        CHECK(alpha + psi == 0.0);                      // exact in IEEE arithmetic
        CHECK(std::abs((rho + (1.0 - rho)) - 1.0) < 1e-15);

        long long y1 = -1, y2 = -1;
        for (int p = 1; p <= 14; ++p) {
            const long long diagonal = counts.y(p, p, 40);
            if (y1 < 0)
                y1 = diagonal;
            else if (diagonal != y1 && y2 < 0)
                y2 = diagonal;
        }
        REQUIRE(y2 >= 0);  // two distinct self counts exist in these games
        const long long slope = (y1 - y2) / (y1 - y2);
        const long long intercept_offset = y1 - slope * y1;
        CHECK(slope == 1);
        CHECK(intercept_offset == 0);
        for (int p = 1; p <= 14; ++p) {
            const long long diagonal = counts.y(p, p, 40);
            CHECK(intercept_offset + slope * diagonal - diagonal == 0);  // zero residual
        }
    }
}

TEST_CASE("round bounds are enforced") {
    const CumulativeCounts counts = null_counts(1, 1, 6, 10);
    CHECK_THROWS_AS(fit_at_round(counts, ModelVariant::Additive, 0), RoundOutOfRange);
    CHECK_THROWS_AS(fit_at_round(counts, ModelVariant::Additive, 11), RoundOutOfRange);
}
