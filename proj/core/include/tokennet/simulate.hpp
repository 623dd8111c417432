#pragma once

#include <vector>

#include "tokennet/rng.hpp"
#include "tokennet/types.hpp"

namespace tokennet {

/// Receiver set for the "give at random" null behaviour. The default includes
/// the giver's own node, i.e. each of the n players is chosen with probability
/// 1/n per round.
enum class NullReceiverSet {
    IncludeSelf,
    ExcludeSelf,
};

/// Simulates a complete game in which every player gives at random each round.
/// Draw order is pinned (round-major, giver-ascending), so the log is a pure
/// function of (config, seed). The result always passes validate_log.
AllocationLog simulate_null_game(const GameConfig& config, SeedSpec seed,
                                 NullReceiverSet receivers = NullReceiverSet::IncludeSelf);

/// Semi-simulated replay: records whose giver is not in `replaced` are copied
/// verbatim (receivers untouched); records whose giver is in `replaced` get a
/// fresh receiver drawn uniformly from all n players. The replay is open-loop:
/// the kept players' actions are not re-decided against the altered history.
/// Throws UnknownPlayer for ids outside 1..n.
AllocationLog replay_with_null_players(const ValidatedGame& game,
                                       const std::vector<int>& replaced, SeedSpec seed);

/// An indexed family of null games: replicate k is exactly
/// simulate_null_game(config, SeedSpec{master_seed, k}), so any subset of
/// indices can be materialized independently, in any order, on any number of
/// workers.
class ReplicateSet {
public:
    ReplicateSet(GameConfig config, int n_replicates, std::uint64_t master_seed,
                 NullReceiverSet receivers)
        : config_(std::move(config)),
          n_replicates_(n_replicates),
          master_seed_(master_seed),
          receivers_(receivers) {}

    int size() const { return n_replicates_; }
    std::uint64_t master_seed() const { return master_seed_; }
    const GameConfig& config() const { return config_; }

    AllocationLog log_at(int replicate_index) const {
        return simulate_null_game(config_, SeedSpec{master_seed_,
                                                    static_cast<std::uint64_t>(replicate_index)},
                                  receivers_);
    }

private:
    GameConfig config_;
    int n_replicates_;
    std::uint64_t master_seed_;
    NullReceiverSet receivers_;
};

ReplicateSet generate_replicates(const GameConfig& config, int n_replicates,
                                 std::uint64_t master_seed,
                                 NullReceiverSet receivers = NullReceiverSet::IncludeSelf);

}  // namespace tokennet
