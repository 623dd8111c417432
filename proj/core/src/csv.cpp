#include "tokennet/csv.hpp"

#include <array>
#include <optional>

#include "tokennet/explore.hpp"
#include "tokennet/io.hpp"

namespace tokennet::csv {

std::string proportions(const CumulativeCounts& counts) {
    std::string out = "round,p_ingroup,p_outgroup,p_self\n";
    for (int t = 1; t <= counts.n_rounds(); ++t) {
        const SourceProportions p = source_proportions(counts, t);
        out += std::to_string(t) + "," + format_double(p.ingroup) + "," +
               format_double(p.outgroup) + "," + format_double(p.self) + "\n";
    }
    return out;
}

std::string correlations(const CumulativeCounts& counts) {
    const int final_round = counts.n_rounds();
    std::string out = "scope,include_self,pearson_r,defined\n";
    struct Case {
        PairScope scope;
        bool include_self;
        const char* label;
    };
    const std::array<Case, 3> cases{{{PairScope::Ingroup, false, "ingroup"},
                                     {PairScope::Ingroup, true, "ingroup"},
                                     {PairScope::Outgroup, false, "outgroup"}}};
    for (const Case& c : cases) {
        std::optional<double> r;
        try {
            r = reciprocity_correlation(counts, final_round, c.scope, c.include_self);
        } catch (const EmptyScope&) {
            r = std::nullopt;  // e.g. a single-group game has no outgroup pairs
        }
        out += std::string(c.label) + "," + (c.include_self ? "1" : "0") + "," +
               (r ? format_double(*r) : "nan") + "," + (r ? "1" : "0") + "\n";
    }
    return out;
}

std::string scatter(const CumulativeCounts& counts) {
    std::string out = "i,j,tokens_received,tokens_given,cross_group,self_pair\n";
    for (const PairObservation& row : scatter_export(counts, counts.n_rounds(), true)) {
        out += std::to_string(row.i) + "," + std::to_string(row.j) + "," +
               std::to_string(row.tokens_received) + "," + std::to_string(row.tokens_given) +
               "," + (row.cross_group ? "1" : "0") + "," + (row.self_pair ? "1" : "0") + "\n";
    }
    return out;
}

std::string residuals_at(const CumulativeCounts& counts, ModelVariant variant, int t) {
    std::string out = "i,j,residual\n";
    const std::vector<double> residuals = residual_export(counts, variant, t);
    if (residuals.empty()) return out;  // degenerate fit
    const std::vector<PairObservation> rows = pair_table(counts, t, false);
    for (std::size_t r = 0; r < rows.size(); ++r)
        out += std::to_string(rows[r].i) + "," + std::to_string(rows[r].j) + "," +
               format_double(residuals[r]) + "\n";
    return out;
}

std::string residuals_bundle(const CumulativeCounts& counts, ModelVariant variant) {
    std::string out = "t,i,j,residual\n";
    for (int t : {10, 25, 40}) {
        if (t > counts.n_rounds()) continue;
        const std::vector<double> residuals = residual_export(counts, variant, t);
        if (residuals.empty()) continue;
        const std::vector<PairObservation> rows = pair_table(counts, t, false);
        for (std::size_t r = 0; r < rows.size(); ++r)
            out += std::to_string(t) + "," + std::to_string(rows[r].i) + "," +
                   std::to_string(rows[r].j) + "," + format_double(residuals[r]) + "\n";
    }
    return out;
}

namespace {

void append_fit_rows(std::string& out, const FitResult& fit, int round,
                     const std::string& prefix) {
    for (const std::string& coef : fit.coef_names) {
        const double value =
            fit.degenerate ? std::numeric_limits<double>::quiet_NaN() : fit.coefficient(coef);
        out += prefix + std::to_string(round) + "," + coef + "," + format_double(value) + "," +
               format_double(fit.r_squared) + "," + (fit.degenerate ? "1" : "0") + "\n";
    }
}

}  // namespace

std::string fit(const FitResult& fit_result, int round) {
    std::string out = "round,coef_name,value,r_squared,degenerate\n";
    append_fit_rows(out, fit_result, round, "");
    return out;
}

std::string trajectory(const Trajectory& trajectory) {
    std::string out = "round,coef_name,value,r_squared,degenerate\n";
    for (int t = 1; t <= trajectory.n_rounds; ++t)
        for (int c = 0; c < trajectory.n_coefficients(); ++c)
            out += std::to_string(t) + "," + trajectory.coef_names[static_cast<std::size_t>(c)] +
                   "," + format_double(trajectory.coefficient(t, c)) + "," +
                   format_double(trajectory.r_squared[static_cast<std::size_t>(t - 1)]) + "," +
                   (trajectory.is_degenerate(t) ? "1" : "0") + "\n";
    return out;
}

std::string all_trajectories(const CumulativeCounts& counts) {
    std::string out = "model,round,coef_name,value,r_squared,degenerate\n";
    for (ModelVariant variant : {ModelVariant::Reciprocity, ModelVariant::Group,
                                 ModelVariant::Additive, ModelVariant::Interaction}) {
        const Trajectory fitted = fit_trajectory(counts, variant);
        for (int t = 1; t <= fitted.n_rounds; ++t)
            for (int c = 0; c < fitted.n_coefficients(); ++c)
                out += std::string(variant_name(variant)) + "," + std::to_string(t) + "," +
                       fitted.coef_names[static_cast<std::size_t>(c)] + "," +
                       format_double(fitted.coefficient(t, c)) + "," +
                       format_double(fitted.r_squared[static_cast<std::size_t>(t - 1)]) + "," +
                       (fitted.is_degenerate(t) ? "1" : "0") + "\n";
    }
    return out;
}

std::string null_distribution(const NullDistribution& dist) {
    std::string out = "coef,replicate,value\n";
    for (std::size_t c = 0; c < dist.coef_names.size(); ++c)
        for (std::size_t k = 0; k < dist.replicate_ids.size(); ++k)
            out += dist.coef_names[c] + "," + std::to_string(dist.replicate_ids[k]) + "," +
                   format_double(dist.samples[c][k]) + "\n";
    return out;
}

std::string tests(const FitResult& observed, const NullDistribution& dist) {
    std::string out = "coef,estimate,p_value,lo95,hi95\n";
    for (const std::string& coef : observed.coef_names) {
        const double estimate = observed.coefficient(coef);
        const double p = empirical_p(estimate, dist, coef);
        const auto [lo, hi] = bounds95(dist, coef);
        out += coef + "," + format_double(estimate) + "," + format_double(p) + "," +
               format_double(lo) + "," + format_double(hi) + "\n";
    }
    return out;
}

std::string bands(const BandTrajectory& band_trajectory) {
    std::string out = "round,coef,lo,mean,hi\n";
    for (int t = 1; t <= band_trajectory.n_rounds; ++t)
        for (int c = 0; c < band_trajectory.n_coefficients(); ++c)
            out += std::to_string(t) + "," +
                   band_trajectory.coef_names[static_cast<std::size_t>(c)] + "," +
                   format_double(band_trajectory.lo_at(t, c)) + "," +
                   format_double(band_trajectory.mean_at(t, c)) + "," +
                   format_double(band_trajectory.hi_at(t, c)) + "\n";
    return out;
}

std::string influence(const InfluenceScores& scores) {
    std::string out = "player,d_rho,d_gamma,std_rho,std_gamma,flag_rho,flag_gamma\n";
    for (std::size_t i = 0; i < scores.players.size(); ++i) {
        out += std::to_string(scores.players[i]) + "," + format_double(scores.d_rho[i]) + "," +
               format_double(scores.d_gamma[i]) + "," + format_double(scores.std_rho[i]) + "," +
               format_double(scores.std_gamma[i]) + "," + (scores.flag_rho[i] ? "1" : "0") +
               "," + (scores.flag_gamma[i] ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace tokennet::csv
