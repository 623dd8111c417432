#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tokennet/counts.hpp"

namespace tokennet {

/// The four pairwise regression variants. All regress the received count on an
/// intercept plus a subset of {reciprocal count, cross-group indicator, their
/// product}:
///   Reciprocity:  intercept + reciprocity
///   Group:        intercept + group
///   Additive:     intercept + reciprocity + group
///   Interaction:  intercept + reciprocity + group + interaction
enum class ModelVariant {
    Reciprocity,
    Group,
    Additive,
    Interaction,
};

std::string_view variant_name(ModelVariant variant);
ModelVariant parse_variant(std::string_view name);  // throws Error on unknown names

/// Canonical coefficient names, intercept first, in design-matrix column
/// order: "intercept", "reciprocity", "group", "interaction".
std::vector<std::string> coefficient_names(ModelVariant variant);
int coefficient_count(ModelVariant variant);

/// Minimal dense row-major matrix; all problems here are (rows x p) with tiny p.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// Caller-supplied extra regressor: one value per pair row, appended after the
/// variant's own columns. No extra columns are built in.
struct ExtraColumn {
    std::string name;
    std::vector<double> values;
};

struct DesignMatrix {
    Matrix x;                              // intercept column of ones, then regressors
    std::vector<double> response;          // received counts
    std::vector<std::string> column_names; // aligned with x's columns
};

/// Builds the design matrix for the given rows. Rows must be i != j only
/// (throws SelfRowPresent otherwise) and non-empty (throws DimensionMismatch).
/// Extra columns must match the row count.
DesignMatrix design_matrix(std::span<const PairObservation> pairs, ModelVariant variant,
                           std::span<const ExtraColumn> extras = {});

}  // namespace tokennet
