#pragma once

#include <cstdint>
#include <vector>

#include "tokennet/errors.hpp"

namespace tokennet {

/// Geometry of one token-exchange game. Player ids are 1..n_players with no
/// gaps; `group_of[p-1]` is the group id of player p. Group ids are arbitrary
/// integers, groups may be unequal in size, and more than two groups are
/// allowed. Initial token balances are carried for reporting only; no analysis
/// uses them.
struct GameConfig {
    int n_players = 0;
    int n_rounds = 0;
    std::vector<int> group_of;
    std::vector<std::int64_t> initial_tokens;

    int group(int player) const { return group_of[static_cast<std::size_t>(player) - 1]; }

    /// Throws ConfigError if the structural invariants do not hold.
    void check() const;
};

/// One token allocation: in `round`, `giver` handed a token to `receiver`.
/// Self-giving (giver == receiver) is legal.
struct Allocation {
    int round = 0;
    int giver = 0;
    int receiver = 0;

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// The raw event stream of a game: one record per player per round, rounds in
/// nondecreasing order. Within-round order carries no meaning (players move
/// simultaneously); serialization canonicalizes by giver id.
struct AllocationLog {
    std::vector<Allocation> records;
};

/// A config + log pair whose invariants have been verified. Obtainable only
/// through validate_log(). Immutable after construction; safe for concurrent
/// reads.
class ValidatedGame {
public:
    const GameConfig& config() const { return config_; }
    const AllocationLog& log() const { return log_; }

private:
    friend ValidatedGame validate_log(GameConfig config, AllocationLog log);

    ValidatedGame(GameConfig config, AllocationLog log)
        : config_(std::move(config)), log_(std::move(log)) {}

    GameConfig config_;
    AllocationLog log_;
};

/// Checks that the log is a complete game for `config`: every round 1..T has
/// exactly one record per giver, ids are in range, and rounds appear in
/// nondecreasing order. Throws ValidationError (or ConfigError for a bad
/// config); returns the validated bundle otherwise.
ValidatedGame validate_log(GameConfig config, AllocationLog log);

}  // namespace tokennet
