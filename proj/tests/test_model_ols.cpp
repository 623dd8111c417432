#include <doctest.h>

#include <cmath>
#include <random>

#include "tokennet/model.hpp"
#include "tokennet/ols.hpp"
#include "support/lsq_oracle.hpp"

using namespace tokennet;

namespace {

PairObservation row(int i, int j, int received, int given, bool cross) {
    return PairObservation{i, j, received, given, cross, false};
}

}  // namespace

TEST_CASE("design matrix columns per variant") {
    const std::vector<PairObservation> pairs{row(1, 2, 5, 2, true)};

    const DesignMatrix additive = design_matrix(pairs, ModelVariant::Additive);
    CHECK(additive.column_names == std::vector<std::string>{"intercept", "reciprocity", "group"});
    CHECK(additive.x.at(0, 0) == 1.0);
    CHECK(additive.x.at(0, 1) == 2.0);
    CHECK(additive.x.at(0, 2) == 1.0);
    CHECK(additive.response[0] == 5.0);

    const DesignMatrix interaction = design_matrix(pairs, ModelVariant::Interaction);
    CHECK(interaction.x.cols == 4);
    CHECK(interaction.x.at(0, 3) == 2.0);  // product column

    const std::vector<PairObservation> same_group{row(1, 2, 5, 2, false)};
    const DesignMatrix vanishing = design_matrix(same_group, ModelVariant::Interaction);
    CHECK(vanishing.x.at(0, 2) == 0.0);
    CHECK(vanishing.x.at(0, 3) == 0.0);  // interaction vanishes with g = 0

    const DesignMatrix reciprocity = design_matrix(pairs, ModelVariant::Reciprocity);
    CHECK(reciprocity.x.cols == 2);
    const DesignMatrix group = design_matrix(pairs, ModelVariant::Group);
    CHECK(group.x.at(0, 1) == 1.0);
}

TEST_CASE("self rows are rejected defensively") {
    std::vector<PairObservation> pairs{row(1, 2, 1, 1, false),
                                       PairObservation{2, 2, 3, 3, false, true}};
    CHECK_THROWS_AS(design_matrix(pairs, ModelVariant::Additive), SelfRowPresent);
    CHECK_THROWS_AS(design_matrix(std::vector<PairObservation>{}, ModelVariant::Additive),
                    DimensionMismatch);
}

TEST_CASE("extra named columns extend the design") {
    const std::vector<PairObservation> pairs{row(1, 2, 1, 0, false), row(2, 1, 2, 1, true)};
    const std::vector<ExtraColumn> extras{{"window_given", {0.5, 1.5}}};
    const DesignMatrix design = design_matrix(pairs, ModelVariant::Additive, extras);
    CHECK(design.column_names.back() == "window_given");
    CHECK(design.x.cols == 4);
    CHECK(design.x.at(1, 3) == 1.5);

    const std::vector<ExtraColumn> mismatched{{"short", {1.0}}};
    CHECK_THROWS_AS(design_matrix(pairs, ModelVariant::Additive, mismatched), DimensionMismatch);
}

TEST_CASE("four interpolating rows solve exactly") {
    // (given, cross, received): intercept 1, reciprocity 1, group -1.
    const std::vector<PairObservation> pairs{row(1, 2, 1, 0, false), row(2, 1, 2, 1, false),
                                             row(1, 3, 0, 0, true), row(3, 1, 1, 1, true)};
    const FitResult fit = ols_fit(design_matrix(pairs, ModelVariant::Additive));
    REQUIRE(!fit.degenerate);
    CHECK(fit.coefficient("intercept") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.coefficient("reciprocity") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.coefficient("group") == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    for (double residual : fit.residuals) CHECK(std::abs(residual) < 1e-12);
    CHECK(fit.n_obs == 4);
    CHECK_THROWS_AS(fit.coefficient("interaction"), UnknownCoefficient);
}

TEST_CASE("constant response is degenerate, not guessed") {
    const std::vector<PairObservation> pairs{row(1, 2, 3, 0, false), row(2, 1, 3, 1, false),
                                             row(1, 3, 3, 2, true), row(3, 1, 3, 1, true)};
    const FitResult fit = ols_fit(design_matrix(pairs, ModelVariant::Additive));
    CHECK(fit.degenerate);
    CHECK(fit.coefficients.empty());
    CHECK(fit.residuals.empty());
    CHECK(std::isnan(fit.r_squared));
    CHECK(std::isnan(fit.coefficient("group")));  // named lookup still works
}

TEST_CASE("collinear regressors are degenerate") {
    // Group column identically zero: [1, g] has rank 1.
    const std::vector<PairObservation> pairs{row(1, 2, 1, 0, false), row(2, 1, 2, 1, false),
                                             row(1, 3, 3, 2, false), row(3, 1, 1, 1, false)};
    const FitResult fit = ols_fit(design_matrix(pairs, ModelVariant::Group));
    CHECK(fit.degenerate);
}

TEST_CASE("dimension mismatches throw") {
    Matrix x(2, 3);
    std::vector<double> y{1.0, 2.0};
    CHECK_THROWS_AS(ols_fit(x, y), DimensionMismatch);  // rows < cols
    Matrix ok(3, 2);
    std::vector<double> short_y{1.0, 2.0};
    CHECK_THROWS_AS(ols_fit(ok, short_y), DimensionMismatch);
}

TEST_CASE("random systems match the independent minimum-norm oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> count_dist(0, 12);

    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 20 + static_cast<int>(rng() % 40);
        std::vector<PairObservation> pairs;
        pairs.reserve(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r)
            pairs.push_back(row(1, 2, count_dist(rng), count_dist(rng), (rng() & 1) != 0));

        for (ModelVariant variant : {ModelVariant::Reciprocity, ModelVariant::Group,
                                     ModelVariant::Additive, ModelVariant::Interaction}) {
            const DesignMatrix design = design_matrix(pairs, variant);
            const FitResult fit = ols_fit(design);
            if (fit.degenerate) continue;
            const auto reference =
                oracle::least_squares(oracle::to_eigen(design.x), oracle::to_eigen(design.response));
            for (std::size_t c = 0; c < fit.coefficients.size(); ++c)
                CHECK(std::abs(fit.coefficients[c] -
                               reference.beta(static_cast<Eigen::Index>(c))) < 1e-8);
            CHECK(std::abs(fit.r_squared - reference.r_squared) < 1e-8);

            // Residuals of a fit with an intercept sum to zero and are
            // orthogonal to the design columns.
            double residual_sum = 0.0;
            for (double residual : fit.residuals) residual_sum += residual;
            CHECK(std::abs(residual_sum) < 1e-8);
            for (int c = 0; c < design.x.cols; ++c) {
                double dot = 0.0;
                for (int r = 0; r < design.x.rows; ++r)
                    dot += design.x.at(r, c) * fit.residuals[static_cast<std::size_t>(r)];
                CHECK(std::abs(dot) < 1e-8);
            }
        }
    }
}
