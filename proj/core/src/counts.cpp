#include "tokennet/counts.hpp"

#include <cstring>
#include <string>

namespace tokennet {

CumulativeCounts::CumulativeCounts(const ValidatedGame& game) {
    const GameConfig& config = game.config();
    n_ = config.n_players;
    rounds_ = config.n_rounds;
    groups_ = config.group_of;

    const std::size_t plane = static_cast<std::size_t>(n_) * n_;
    y_.assign(plane * rounds_, 0);
    cross_.assign(plane, 0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            cross_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] =
                (config.group(i) != config.group(j)) ? 1 : 0;

    // Each round's plane starts as a copy of the previous and gains one
    // increment per giver.
    for (const Allocation& rec : game.log().records) {
        std::size_t slot = (static_cast<std::size_t>(rec.round - 1) * n_ + (rec.giver - 1)) * n_ +
                           (rec.receiver - 1);
        ++y_[slot];
    }
    for (int t = 2; t <= rounds_; ++t) {
        std::int32_t* current = y_.data() + static_cast<std::size_t>(t - 1) * plane;
        const std::int32_t* previous = y_.data() + static_cast<std::size_t>(t - 2) * plane;
        for (std::size_t k = 0; k < plane; ++k) current[k] += previous[k];
    }

    // Conservation: every giver hands out exactly one token per round, so the
    // receiver sums must hit t exactly. Integer check on every constructed
    // tensor, simulated or ingested.
    for (int t = 1; t <= rounds_; ++t) {
        for (int j = 1; j <= n_; ++j) {
            std::int64_t received = 0;
            const std::int32_t* column =
                y_.data() + (static_cast<std::size_t>(t - 1) * n_ + (j - 1)) * n_;
            for (int i = 0; i < n_; ++i) received += column[i];
            if (received != t)
                throw Error("cumulative counts violate conservation at giver " +
                            std::to_string(j) + ", round " + std::to_string(t));
        }
    }
}

CumulativeCounts cumulative_counts(const ValidatedGame& game) { return CumulativeCounts(game); }

std::vector<PairObservation> pair_table(const CumulativeCounts& counts, int t,
                                        bool include_self) {
    if (t < 1 || t > counts.n_rounds()) throw RoundOutOfRange(t, counts.n_rounds());
    const int n = counts.n_players();
    std::vector<PairObservation> rows;
    rows.reserve(static_cast<std::size_t>(n) * (include_self ? n : n - 1));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j && !include_self) continue;
            rows.push_back(PairObservation{i, j, counts.y(i, j, t), counts.y(j, i, t),
                                           counts.g(i, j) != 0, i == j});
        }
    }
    return rows;
}

}  // namespace tokennet
