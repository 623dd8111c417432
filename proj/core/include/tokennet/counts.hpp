#pragma once

#include <cstdint>
#include <vector>

#include "tokennet/types.hpp"

namespace tokennet {

/// One row of the pairwise modelling table at a fixed round: player i's
/// received count from player j (the response) together with the reciprocal
/// count and the pair indicators.
struct PairObservation {
    int i = 0;                // focal player (response side)
    int j = 0;                // counterpart
    int tokens_received = 0;  // tokens i received from j up to the round
    int tokens_given = 0;     // tokens i gave to j up to the round
    bool cross_group = false; // true iff i and j are in different groups
    bool self_pair = false;   // true iff i == j

    friend bool operator==(const PairObservation&, const PairObservation&) = default;
};

/// The cumulative exchange tensor of a validated game: y(i, j, t) is the
/// number of tokens player i received from player j up to and including round
/// t, plus the cross-group indicator g(i, j) and self indicator s(i, j).
///
/// Guarantees, checked at construction:
///   - y(i, j, t) is nondecreasing in t, with per-round increments in {0, 1};
///   - sum over receivers i of y(i, j, t) == t for every giver j and round t
///     (each giver hands out exactly one token per round);
///   - g(i, j) == 0 iff i and j share a group, g(i, i) == 0.
///
/// Immutable after construction; concurrent reads are safe.
class CumulativeCounts {
public:
    explicit CumulativeCounts(const ValidatedGame& game);

    int n_players() const { return n_; }
    int n_rounds() const { return rounds_; }

    int y(int i, int j, int t) const {
        return y_[(static_cast<std::size_t>(t - 1) * n_ + (j - 1)) * n_ + (i - 1)];
    }
    int g(int i, int j) const { return cross_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
    int s(int i, int j) const { return i == j ? 1 : 0; }

    int group_of(int player) const { return groups_[static_cast<std::size_t>(player) - 1]; }

private:
    int n_ = 0;
    int rounds_ = 0;
    std::vector<std::int32_t> y_;      // layout: ((t-1)*n + (j-1))*n + (i-1)
    std::vector<std::uint8_t> cross_;  // n x n, row-major
    std::vector<int> groups_;
};

/// Builds the cumulative tensor from a validated game.
CumulativeCounts cumulative_counts(const ValidatedGame& game);

/// The modelling table at round t: rows (i, j) for i != j in (i-major,
/// j-ascending) order, n(n-1) rows. With include_self, the diagonal rows are
/// kept as well (n^2 rows); those are used only by exploratory exports, never
/// by the model. Throws RoundOutOfRange.
std::vector<PairObservation> pair_table(const CumulativeCounts& counts, int t, bool include_self);

}  // namespace tokennet
