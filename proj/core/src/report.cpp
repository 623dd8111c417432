#include "tokennet/report.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "tokennet/counts.hpp"
#include "tokennet/explore.hpp"
#include "tokennet/fit.hpp"
#include "tokennet/graph.hpp"
#include "tokennet/infer.hpp"
#include "tokennet/influence.hpp"
#include "tokennet/io.hpp"
#include "tokennet/version.hpp"

namespace tokennet {

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError&) {
        throw;  // keeps its type so callers can distinguish bad input data
    } catch (const Error& e) {
        throw Error(std::string("report stage '") + name + "': " + e.what());
    }
}

std::string proportions_csv(const CumulativeCounts& counts) {
    std::string out = "round,p_ingroup,p_outgroup,p_self\n";
    for (int t = 1; t <= counts.n_rounds(); ++t) {
        const SourceProportions p = source_proportions(counts, t);
        out += std::to_string(t) + "," + format_double(p.ingroup) + "," +
               format_double(p.outgroup) + "," + format_double(p.self) + "\n";
    }
    return out;
}

std::string correlations_csv(const CumulativeCounts& counts) {
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

std::string scatter_csv(const CumulativeCounts& counts) {
    std::string out = "i,j,tokens_received,tokens_given,cross_group,self_pair\n";
    for (const PairObservation& row : scatter_export(counts, counts.n_rounds(), true)) {
        out += std::to_string(row.i) + "," + std::to_string(row.j) + "," +
               std::to_string(row.tokens_received) + "," + std::to_string(row.tokens_given) +
               "," + (row.cross_group ? "1" : "0") + "," + (row.self_pair ? "1" : "0") + "\n";
    }
    return out;
}

std::string residuals_csv(const CumulativeCounts& counts, ModelVariant variant) {
    std::string out = "t,i,j,residual\n";
    for (int t : {10, 25, 40}) {
        if (t > counts.n_rounds()) continue;
        const std::vector<double> residuals = residual_export(counts, variant, t);
        if (residuals.empty()) continue;  // degenerate fit at this round
        const std::vector<PairObservation> rows = pair_table(counts, t, false);
        for (std::size_t r = 0; r < rows.size(); ++r)
            out += std::to_string(t) + "," + std::to_string(rows[r].i) + "," +
                   std::to_string(rows[r].j) + "," + format_double(residuals[r]) + "\n";
    }
    return out;
}

std::string trajectories_csv(const CumulativeCounts& counts) {
    std::string out = "model,round,coef_name,value,r_squared,degenerate\n";
    for (ModelVariant variant : {ModelVariant::Reciprocity, ModelVariant::Group,
                                 ModelVariant::Additive, ModelVariant::Interaction}) {
        const Trajectory trajectory = fit_trajectory(counts, variant);
        for (int t = 1; t <= trajectory.n_rounds; ++t) {
            for (int c = 0; c < trajectory.n_coefficients(); ++c) {
                out += std::string(variant_name(variant)) + "," + std::to_string(t) + "," +
                       trajectory.coef_names[static_cast<std::size_t>(c)] + "," +
                       format_double(trajectory.coefficient(t, c)) + "," +
                       format_double(trajectory.r_squared[static_cast<std::size_t>(t - 1)]) +
                       "," + (trajectory.is_degenerate(t) ? "1" : "0") + "\n";
            }
        }
    }
    return out;
}

std::string bands_csv(const BandTrajectory& bands) {
    std::string out = "round,coef,lo,mean,hi\n";
    for (int t = 1; t <= bands.n_rounds; ++t)
        for (int c = 0; c < bands.n_coefficients(); ++c)
            out += std::to_string(t) + "," + bands.coef_names[static_cast<std::size_t>(c)] + "," +
                   format_double(bands.lo_at(t, c)) + "," + format_double(bands.mean_at(t, c)) +
                   "," + format_double(bands.hi_at(t, c)) + "\n";
    return out;
}

std::string tests_csv(const FitResult& observed, const NullDistribution& dist) {
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

std::string influence_csv(const InfluenceScores& scores) {
    std::string out = "player,d_rho,d_gamma,std_rho,std_gamma,flag_rho,flag_gamma\n";
    for (std::size_t i = 0; i < scores.players.size(); ++i) {
        out += std::to_string(scores.players[i]) + "," + format_double(scores.d_rho[i]) + "," +
               format_double(scores.d_gamma[i]) + "," + format_double(scores.std_rho[i]) + "," +
               format_double(scores.std_gamma[i]) + "," + (scores.flag_rho[i] ? "1" : "0") +
               "," + (scores.flag_gamma[i] ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace

ReportResult run_report(const GameConfig& config, const AllocationLog& log,
                        const std::filesystem::path& out_dir, const ReportOptions& options) {
    if (options.replicates < 100) throw Error("report needs at least 100 replicates");

    const ValidatedGame game = validate_log(config, log);  // ValidationError propagates as-is
    const CumulativeCounts counts = stage("counts", [&] { return CumulativeCounts(game); });

    ReportResult result;
    auto emit = [&](const char* name, const std::string& content) {
        const std::filesystem::path path = out_dir / name;
        write_text_file(path, content);
        result.outputs.push_back(path);
    };

    stage("explore", [&] {
        emit("proportions.csv", proportions_csv(counts));
        emit("correlations.csv", correlations_csv(counts));
        emit("scatter.csv", scatter_csv(counts));
        emit("residuals.csv", residuals_csv(counts, options.variant));
        return 0;
    });

    stage("fit", [&] {
        emit("trajectories.csv", trajectories_csv(counts));
        return 0;
    });

    stage("infer", [&] {
        const NullTrajectories ensemble = collect_null_trajectories(
            config, options.variant, options.replicates, options.master_seed, options.threads);
        emit("bands.csv", bands_csv(ensemble.bands()));
        const FitResult observed = fit_at_round(counts, options.variant, counts.n_rounds());
        if (observed.degenerate)
            throw Error("observed fit at the final round is degenerate; nothing to test");
        emit("tests.csv", tests_csv(observed, ensemble.distribution_at(counts.n_rounds())));
        return 0;
    });

    const InfluenceScores scores = stage("influence", [&] {
        InfluenceScores table =
            influence_table(game, options.variant, options.replicates, options.master_seed,
                            options.influence_threshold, options.threads);
        emit("influence.csv", influence_csv(table));
        return table;
    });

    stage("graph", [&] {
        GameGraph graph = build_graph(counts, &scores);
        graph = layout_fr(std::move(graph), options.layout_iterations, options.master_seed);
        emit("graph.graphml", graph_to_string(graph, GraphFormat::GraphML));
        return 0;
    });

    stage("manifest", [&] {
        nlohmann::json outputs = nlohmann::json::array();
        for (const std::filesystem::path& path : result.outputs)
            outputs.push_back({{"file", path.filename().string()},
                               {"fnv1a64", hex64(fnv1a64_file(path))}});
        nlohmann::json manifest{
            {"tool", kToolName},
            {"version", kVersion},
            {"master_seed", options.master_seed},
            {"replicates", options.replicates},
            {"model", std::string(variant_name(options.variant))},
            {"influence_threshold", options.influence_threshold},
            {"layout_iterations", options.layout_iterations},
            {"config", config_to_json(config)},
            {"config_hash", hex64(config_hash(config))},
            {"log_records", log.records.size()},
            {"outputs", outputs},
        };
        result.manifest_path = out_dir / "manifest.json";
        write_text_file(result.manifest_path, manifest.dump(2) + "\n");
        return 0;
    });

    return result;
}

}  // namespace tokennet
