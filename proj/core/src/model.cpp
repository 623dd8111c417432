#include "tokennet/model.hpp"

#include <string>

namespace tokennet {

std::string_view variant_name(ModelVariant variant) {
    switch (variant) {
        case ModelVariant::Reciprocity: return "reciprocity";
        case ModelVariant::Group: return "group";
        case ModelVariant::Additive: return "additive";
        case ModelVariant::Interaction: return "interaction";
    }
    return "?";
}

ModelVariant parse_variant(std::string_view name) {
    if (name == "reciprocity") return ModelVariant::Reciprocity;
    if (name == "group") return ModelVariant::Group;
    if (name == "additive") return ModelVariant::Additive;
    if (name == "interaction") return ModelVariant::Interaction;
    throw Error("unknown model variant '" + std::string(name) +
                "' (expected reciprocity, group, additive or interaction)");
}

std::vector<std::string> coefficient_names(ModelVariant variant) {
    switch (variant) {
        case ModelVariant::Reciprocity: return {"intercept", "reciprocity"};
        case ModelVariant::Group: return {"intercept", "group"};
        case ModelVariant::Additive: return {"intercept", "reciprocity", "group"};
        case ModelVariant::Interaction: return {"intercept", "reciprocity", "group", "interaction"};
    }
    return {};
}

int coefficient_count(ModelVariant variant) {
    return static_cast<int>(coefficient_names(variant).size());
}

DesignMatrix design_matrix(std::span<const PairObservation> pairs, ModelVariant variant,
                           std::span<const ExtraColumn> extras) {
    if (pairs.empty()) throw DimensionMismatch("design_matrix: empty pair table");
    for (const ExtraColumn& extra : extras)
        if (extra.values.size() != pairs.size())
            throw DimensionMismatch("extra column '" + extra.name + "' has " +
                                    std::to_string(extra.values.size()) + " values for " +
                                    std::to_string(pairs.size()) + " rows");

    const bool uses_reciprocity =
        variant == ModelVariant::Reciprocity || variant == ModelVariant::Additive ||
        variant == ModelVariant::Interaction;
    const bool uses_group = variant == ModelVariant::Group || variant == ModelVariant::Additive ||
                            variant == ModelVariant::Interaction;
    const bool uses_interaction = variant == ModelVariant::Interaction;

    DesignMatrix design;
    design.column_names = coefficient_names(variant);
    for (const ExtraColumn& extra : extras) design.column_names.push_back(extra.name);

    const int rows = static_cast<int>(pairs.size());
    const int cols = static_cast<int>(design.column_names.size());
    design.x = Matrix(rows, cols);
    design.response.resize(pairs.size());

    for (int r = 0; r < rows; ++r) {
        const PairObservation& pair = pairs[static_cast<std::size_t>(r)];
        if (pair.self_pair || pair.i == pair.j)
            throw SelfRowPresent("design_matrix: self pair (" + std::to_string(pair.i) + ", " +
                                 std::to_string(pair.j) + ") in modelling table");
        int c = 0;
        design.x.at(r, c++) = 1.0;
        const double reciprocal = static_cast<double>(pair.tokens_given);
        const double cross = pair.cross_group ? 1.0 : 0.0;
        if (uses_reciprocity) design.x.at(r, c++) = reciprocal;
        if (uses_group) design.x.at(r, c++) = cross;
        if (uses_interaction) design.x.at(r, c++) = cross * reciprocal;
        for (const ExtraColumn& extra : extras)
            design.x.at(r, c++) = extra.values[static_cast<std::size_t>(r)];
        design.response[static_cast<std::size_t>(r)] = static_cast<double>(pair.tokens_received);
    }
    return design;
}

}  // namespace tokennet
