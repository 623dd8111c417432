#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tokennet/fit.hpp"
#include "tokennet/types.hpp"

namespace tokennet {

/// Player-replacement influence scores. For each player, d_rho / d_gamma are
/// the average L1 distances between the observed game's reciprocity / group
/// coefficient trajectories and those of replays in which only that player's
/// giving is regenerated at random. std_* divide by the across-player mean
/// (so the standardized metrics average to exactly 1); values above the
/// threshold mark players whose pull on the model is anomalous.
struct InfluenceScores {
    std::vector<int> players;
    std::vector<double> d_rho;
    std::vector<double> d_gamma;
    std::vector<double> std_rho;
    std::vector<double> std_gamma;
    std::vector<std::uint8_t> flag_rho;    // std_rho > threshold
    std::vector<std::uint8_t> flag_gamma;  // std_gamma > threshold
    double threshold = 2.0;
    /// Rounds skipped because the original or the replayed fit was degenerate
    /// (each contributes 0 to its L1 sum), totalled across players/replicates.
    std::int64_t degenerate_round_skips = 0;
};

/// Default replicate count for influence runs.
inline constexpr int kDefaultInfluenceReplicates = 10000;

/// Average trajectory displacement (reciprocity, group) caused by replacing
/// `player` with a random giver, over n_replicates replays. Replicate k of
/// player i draws from the substream (master_seed, i, k), so the whole table
/// is reproducible and parallel over both players and replicates. The variant
/// must be Additive (the influence metric scores exactly the reciprocity and
/// group paths). Throws UnknownPlayer and AllFitsDegenerate.
std::pair<double, double> influence_for_player(const ValidatedGame& game, int player,
                                               ModelVariant variant, int n_replicates,
                                               std::uint64_t master_seed, int threads = 0);

/// influence_for_player for every player, standardized per metric by the
/// across-player mean.
InfluenceScores influence_table(const ValidatedGame& game, ModelVariant variant,
                                int n_replicates, std::uint64_t master_seed,
                                double threshold = 2.0, int threads = 0);

/// Players whose standardized score exceeds the threshold, as (player, metric)
/// pairs with metric in {"d_rho", "d_gamma"}; ordered by player then metric.
std::vector<std::pair<int, std::string>> flag_influential(const InfluenceScores& scores,
                                                          double threshold = 2.0);

}  // namespace tokennet
