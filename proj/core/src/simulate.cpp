#include "tokennet/simulate.hpp"

#include <algorithm>

namespace tokennet {

AllocationLog simulate_null_game(const GameConfig& config, SeedSpec seed,
                                 NullReceiverSet receivers) {
    config.check();
    const int n = config.n_players;
    Rng rng(seed);

    AllocationLog log;
    log.records.reserve(static_cast<std::size_t>(n) * config.n_rounds);
    for (int round = 1; round <= config.n_rounds; ++round) {
        for (int giver = 1; giver <= n; ++giver) {
            int receiver;
            if (receivers == NullReceiverSet::IncludeSelf) {
                receiver = 1 + rng.uniform_int(n);
            } else {
                if (n == 1)
                    throw ConfigError("cannot exclude self with a single player");
                // Draw from the n-1 others, skipping the giver's own slot.
                int draw = 1 + rng.uniform_int(n - 1);
                receiver = draw < giver ? draw : draw + 1;
            }
            log.records.push_back(Allocation{round, giver, receiver});
        }
    }
    return log;
}

AllocationLog replay_with_null_players(const ValidatedGame& game,
                                       const std::vector<int>& replaced, SeedSpec seed) {
    const int n = game.config().n_players;
    std::vector<bool> is_replaced(static_cast<std::size_t>(n) + 1, false);
    for (int player : replaced) {
        if (player < 1 || player > n) throw UnknownPlayer(player);
        is_replaced[static_cast<std::size_t>(player)] = true;
    }

    Rng rng(seed);
    AllocationLog replay;
    replay.records.reserve(game.log().records.size());
    for (const Allocation& rec : game.log().records) {
        Allocation out = rec;
        if (is_replaced[static_cast<std::size_t>(rec.giver)]) out.receiver = 1 + rng.uniform_int(n);
        replay.records.push_back(out);
    }
    return replay;
}

ReplicateSet generate_replicates(const GameConfig& config, int n_replicates,
                                 std::uint64_t master_seed, NullReceiverSet receivers) {
    config.check();
    if (n_replicates < 1) throw Error("n_replicates must be >= 1");
    return ReplicateSet(config, n_replicates, master_seed, receivers);
}

}  // namespace tokennet
