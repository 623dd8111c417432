#include "tokennet/influence.hpp"

#include <cmath>
#include <string>

#include "tokennet/counts.hpp"
#include "tokennet/parallel.hpp"
#include "tokennet/simulate.hpp"

namespace tokennet {

namespace {

struct ReplayDistance {
    double rho = 0.0;
    double gamma = 0.0;
    int skipped_rounds = 0;
    int usable_rounds = 0;
};

int coefficient_index(const std::vector<std::string>& names, const char* wanted) {
    for (std::size_t c = 0; c < names.size(); ++c)
        if (names[c] == wanted) return static_cast<int>(c);
    throw UnknownCoefficient(wanted);
}

// L1 distance between the observed trajectories and one replay in which
// `player` gives at random. Rounds where either fit is degenerate contribute
// zero and are counted.
ReplayDistance replay_distance(const ValidatedGame& game, const Trajectory& original,
                               int rho_index, int gamma_index, int player, SeedSpec seed,
                               ModelVariant variant) {
    const AllocationLog replay = replay_with_null_players(game, {player}, seed);
    const Trajectory altered =
        fit_trajectory(CumulativeCounts(validate_log(game.config(), replay)), variant);

    ReplayDistance distance;
    for (int t = 1; t <= original.n_rounds; ++t) {
        if (original.is_degenerate(t) || altered.is_degenerate(t)) {
            ++distance.skipped_rounds;
            continue;
        }
        distance.rho += std::abs(original.coefficient(t, rho_index) -
                                 altered.coefficient(t, rho_index));
        distance.gamma += std::abs(original.coefficient(t, gamma_index) -
                                   altered.coefficient(t, gamma_index));
        ++distance.usable_rounds;
    }
    return distance;
}

void require_additive(ModelVariant variant) {
    if (variant != ModelVariant::Additive)
        throw Error("influence metrics are defined for the additive model only");
}

}  // namespace

std::pair<double, double> influence_for_player(const ValidatedGame& game, int player,
                                               ModelVariant variant, int n_replicates,
                                               std::uint64_t master_seed, int threads) {
    require_additive(variant);
    if (player < 1 || player > game.config().n_players) throw UnknownPlayer(player);
    if (n_replicates < 1) throw Error("n_replicates must be >= 1");

    const Trajectory original = fit_trajectory(CumulativeCounts(game), variant);
    const int rho_index = coefficient_index(original.coef_names, "reciprocity");
    const int gamma_index = coefficient_index(original.coef_names, "group");
    const SeedSpec player_stream{master_seed, static_cast<std::uint64_t>(player)};

    std::vector<ReplayDistance> distances(static_cast<std::size_t>(n_replicates));
    parallel_for_indexed(n_replicates, threads, [&](int k) {
        distances[static_cast<std::size_t>(k)] =
            replay_distance(game, original, rho_index, gamma_index, player,
                            player_stream.substream(static_cast<std::uint64_t>(k)), variant);
    });

    double sum_rho = 0.0;
    double sum_gamma = 0.0;
    std::int64_t usable = 0;
    for (const ReplayDistance& distance : distances) {
        sum_rho += distance.rho;
        sum_gamma += distance.gamma;
        usable += distance.usable_rounds;
    }
    if (usable == 0)
        throw AllFitsDegenerate("player " + std::to_string(player) +
                                ": no usable round in any replay comparison");
    const double n = static_cast<double>(n_replicates);
    return {sum_rho / n, sum_gamma / n};
}

InfluenceScores influence_table(const ValidatedGame& game, ModelVariant variant,
                                int n_replicates, std::uint64_t master_seed, double threshold,
                                int threads) {
    require_additive(variant);
    if (n_replicates < 1) throw Error("n_replicates must be >= 1");
    const int n_players = game.config().n_players;

    const Trajectory original = fit_trajectory(CumulativeCounts(game), variant);
    const int rho_index = coefficient_index(original.coef_names, "reciprocity");
    const int gamma_index = coefficient_index(original.coef_names, "group");

    // One task per (player, replicate); results are aggregated in index order
    // afterwards so the table is bit-stable for any worker count.
    const std::size_t n_tasks =
        static_cast<std::size_t>(n_players) * static_cast<std::size_t>(n_replicates);
    std::vector<ReplayDistance> distances(n_tasks);
    parallel_for_indexed(static_cast<int>(n_tasks), threads, [&](int task) {
        const int player = 1 + task / n_replicates;
        const int k = task % n_replicates;
        const SeedSpec player_stream{master_seed, static_cast<std::uint64_t>(player)};
        distances[static_cast<std::size_t>(task)] =
            replay_distance(game, original, rho_index, gamma_index, player,
                            player_stream.substream(static_cast<std::uint64_t>(k)), variant);
    });

    InfluenceScores scores;
    scores.threshold = threshold;
    for (int player = 1; player <= n_players; ++player) {
        double sum_rho = 0.0;
        double sum_gamma = 0.0;
        std::int64_t usable = 0;
        for (int k = 0; k < n_replicates; ++k) {
            const ReplayDistance& distance =
                distances[static_cast<std::size_t>(player - 1) * n_replicates + k];
            sum_rho += distance.rho;
            sum_gamma += distance.gamma;
            usable += distance.usable_rounds;
            scores.degenerate_round_skips += distance.skipped_rounds;
        }
        if (usable == 0)
            throw AllFitsDegenerate("player " + std::to_string(player) +
                                    ": no usable round in any replay comparison");
        scores.players.push_back(player);
        scores.d_rho.push_back(sum_rho / static_cast<double>(n_replicates));
        scores.d_gamma.push_back(sum_gamma / static_cast<double>(n_replicates));
    }

    auto standardize = [n_players](const std::vector<double>& raw, std::vector<double>& out) {
        double mean = 0.0;
        for (double value : raw) mean += value;
        mean /= static_cast<double>(n_players);
        out.resize(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i)
            out[i] = mean == 0.0 ? 1.0 : raw[i] / mean;
    };
    standardize(scores.d_rho, scores.std_rho);
    standardize(scores.d_gamma, scores.std_gamma);

    scores.flag_rho.resize(scores.std_rho.size());
    scores.flag_gamma.resize(scores.std_gamma.size());
    for (std::size_t i = 0; i < scores.std_rho.size(); ++i) {
        scores.flag_rho[i] = scores.std_rho[i] > threshold ? 1 : 0;
        scores.flag_gamma[i] = scores.std_gamma[i] > threshold ? 1 : 0;
    }
    return scores;
}

std::vector<std::pair<int, std::string>> flag_influential(const InfluenceScores& scores,
                                                          double threshold) {
    std::vector<std::pair<int, std::string>> flagged;
    for (std::size_t i = 0; i < scores.players.size(); ++i) {
        if (scores.std_rho[i] > threshold) flagged.emplace_back(scores.players[i], "d_rho");
        if (scores.std_gamma[i] > threshold) flagged.emplace_back(scores.players[i], "d_gamma");
    }
    return flagged;
}

}  // namespace tokennet
