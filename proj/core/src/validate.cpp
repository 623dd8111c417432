#include "tokennet/types.hpp"

#include <string>

namespace tokennet {

ValidationError ValidationError::missing_giver(int round, int player) {
    return {Kind::MissingGiver, round, player,
            "round " + std::to_string(round) + ": no record for giver " + std::to_string(player)};
}

ValidationError ValidationError::duplicate_giver(int round, int player) {
    return {Kind::DuplicateGiver, round, player,
            "round " + std::to_string(round) + ": duplicate record for giver " +
                std::to_string(player)};
}

ValidationError ValidationError::id_out_of_range(int record_index, int round, int giver,
                                                 int receiver) {
    return {Kind::IdOutOfRange, round, giver,
            "record " + std::to_string(record_index) + " (round=" + std::to_string(round) +
                ", giver=" + std::to_string(giver) + ", receiver=" + std::to_string(receiver) +
                ") has an id outside the configured ranges"};
}

ValidationError ValidationError::round_gap(int round) {
    return {Kind::RoundGap, round, 0,
            "round " + std::to_string(round) + ": records missing or out of order"};
}

void GameConfig::check() const {
    if (n_players < 1) throw ConfigError("n_players must be >= 1");
    if (n_rounds < 1) throw ConfigError("n_rounds must be >= 1");
    if (group_of.size() != static_cast<std::size_t>(n_players))
        throw ConfigError("groups must list exactly one group id per player");
    if (initial_tokens.size() != static_cast<std::size_t>(n_players))
        throw ConfigError("initial_tokens must list exactly one balance per player");
    for (std::int64_t tokens : initial_tokens)
        if (tokens < 0) throw ConfigError("initial_tokens must be nonnegative");
}

ValidatedGame validate_log(GameConfig config, AllocationLog log) {
    config.check();
    const int n = config.n_players;
    const int rounds = config.n_rounds;

    if (log.records.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(rounds)) {
        // Cheap pre-check; the scan below pins down the exact round/player.
        // Fall through so the error names the first offending round.
    }

    // seen[(r-1)*n + (p-1)] marks giver p in round r.
    std::vector<bool> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(rounds), false);
    int previous_round = 1;
    for (std::size_t idx = 0; idx < log.records.size(); ++idx) {
        const Allocation& rec = log.records[idx];
        if (rec.round < 1 || rec.round > rounds || rec.giver < 1 || rec.giver > n ||
            rec.receiver < 1 || rec.receiver > n) {
            throw ValidationError::id_out_of_range(static_cast<int>(idx), rec.round, rec.giver,
                                                   rec.receiver);
        }
        if (rec.round < previous_round) throw ValidationError::round_gap(rec.round);
        previous_round = rec.round;

        std::size_t slot = static_cast<std::size_t>(rec.round - 1) * n + (rec.giver - 1);
        if (seen[slot]) throw ValidationError::duplicate_giver(rec.round, rec.giver);
        seen[slot] = true;
    }

    for (int r = 1; r <= rounds; ++r) {
        bool any = false;
        int missing = 0;
        for (int p = 1; p <= n; ++p) {
            if (seen[static_cast<std::size_t>(r - 1) * n + (p - 1)])
                any = true;
            else if (missing == 0)
                missing = p;
        }
        if (!any) throw ValidationError::round_gap(r);
        if (missing != 0) throw ValidationError::missing_giver(r, missing);
    }

    return ValidatedGame(std::move(config), std::move(log));
}

}  // namespace tokennet
