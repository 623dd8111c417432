#include <doctest.h>

#include <cmath>
#include <set>

#include "tokennet/explore.hpp"
#include "tokennet/simulate.hpp"
#include "support/synthetic.hpp"

using namespace tokennet;

namespace {

// n=4, one group; players 1 and 2 exchange all four rounds, 3 and 4 exchange
// twice then self-give twice. Every ordered pair lands on the diagonal
// (received == given) with variation across pairs.
ValidatedGame diagonal_game() {
    GameConfig config;
    config.n_players = 4;
    config.n_rounds = 4;
    config.group_of = {1, 1, 1, 1};
    config.initial_tokens = {0, 0, 0, 0};
    AllocationLog log;
    for (int round = 1; round <= 4; ++round) {
        log.records.push_back({round, 1, 2});
        log.records.push_back({round, 2, 1});
        const bool exchange = round <= 2;
        log.records.push_back({round, 3, exchange ? 4 : 3});
        log.records.push_back({round, 4, exchange ? 3 : 4});
    }
    return validate_log(config, log);
}

}  // namespace

TEST_CASE("all self-giving yields proportions (0, 0, 1)") {
    const GameConfig config = synthetic::balanced_config(6, 5, 0);
    const CumulativeCounts counts =
        cumulative_counts(validate_log(config, synthetic::self_only_game(config)));
    for (int t = 1; t <= 5; ++t) {
        const SourceProportions p = source_proportions(counts, t);
        CHECK(p.ingroup == 0.0);
        CHECK(p.outgroup == 0.0);
        CHECK(p.self == 1.0);
    }
    CHECK_THROWS_AS(source_proportions(counts, 6), RoundOutOfRange);
}

TEST_CASE("proportions sum to one with each part in [0, 1]") {
    const GameConfig config = synthetic::balanced_config();
    for (std::uint64_t k = 0; k < 4; ++k) {
        const CumulativeCounts counts = cumulative_counts(
            validate_log(config, simulate_null_game(config, SeedSpec{14, k})));
        for (int t = 1; t <= 40; ++t) {
            const SourceProportions p = source_proportions(counts, t);
            CHECK(std::abs(p.ingroup + p.outgroup + p.self - 1.0) < 1e-12);
            for (double part : {p.ingroup, p.outgroup, p.self}) {
                CHECK(part >= 0.0);
                CHECK(part <= 1.0);
            }
        }
    }
}

TEST_CASE("null games split sources as 6/14, 7/14, 1/14") {
    const GameConfig config = synthetic::balanced_config();
    double ingroup = 0.0, outgroup = 0.0, self = 0.0;
    const int replicates = 2000;
    for (int k = 0; k < replicates; ++k) {
        const CumulativeCounts counts = cumulative_counts(validate_log(
            config, simulate_null_game(config, SeedSpec{100, static_cast<std::uint64_t>(k)})));
        const SourceProportions p = source_proportions(counts, 40);
        ingroup += p.ingroup;
        outgroup += p.outgroup;
        self += p.self;
    }
    CHECK(std::abs(ingroup / replicates - 6.0 / 14.0) < 0.01);
    CHECK(std::abs(outgroup / replicates - 7.0 / 14.0) < 0.01);
    CHECK(std::abs(self / replicates - 1.0 / 14.0) < 0.01);
}

TEST_CASE("perfect pairwise reciprocation correlates to one") {
    const CumulativeCounts counts = cumulative_counts(diagonal_game());
    const auto r = reciprocity_correlation(counts, 4, PairScope::Ingroup, false);
    REQUIRE(r.has_value());
    CHECK(*r == doctest::Approx(1.0).epsilon(1e-12));

    // A single group has no outgroup pairs at all.
    CHECK_THROWS_AS(reciprocity_correlation(counts, 4, PairScope::Outgroup, false), EmptyScope);
}

TEST_CASE("constant margins are flagged undefined") {
    // Full 3-cycles: everyone has given exactly the same number to everyone.
    GameConfig config = synthetic::balanced_config(4, 3, 0);
    const CumulativeCounts counts =
        cumulative_counts(validate_log(config, synthetic::round_robin_game(config)));
    CHECK(!reciprocity_correlation(counts, 3, PairScope::Ingroup, false).has_value());
}

TEST_CASE("correlation is symmetric in the pair labelling") {
    const GameConfig config = synthetic::balanced_config();
    const CumulativeCounts counts = cumulative_counts(
        validate_log(config, synthetic::biased_game(config, 0.6, SeedSpec{15, 0})));
    // The point set contains (a, b) iff it contains (b, a), so swapping the
    // received/given margins cannot change the coefficient.
    const auto base = reciprocity_correlation(counts, 40, PairScope::Outgroup, false);
    REQUIRE(base.has_value());
    const auto rows = scatter_export(counts, 40, false);
    double mean_received = 0.0, mean_given = 0.0;
    int outgroup_rows = 0;
    for (const PairObservation& pair : rows) {
        if (!pair.cross_group) continue;
        mean_received += pair.tokens_received;
        mean_given += pair.tokens_given;
        ++outgroup_rows;
    }
    CHECK(mean_received == mean_given);  // symmetry of the point set
    CHECK(outgroup_rows == 98);
}

TEST_CASE("scatter export carries both orientations and the diagonal") {
    const GameConfig config = synthetic::balanced_config();
    // Mirror of the famous pair: 3 gives to 8 in 38 rounds (self twice),
    // 8 gives to 3 in all 40.
    AllocationLog log;
    for (int round = 1; round <= 40; ++round) {
        for (int giver = 1; giver <= 14; ++giver) {
            int receiver = giver;  // everyone else self-gives
            if (giver == 3) receiver = round <= 38 ? 8 : 3;
            if (giver == 8) receiver = 3;
            log.records.push_back({round, giver, receiver});
        }
    }
    const CumulativeCounts counts = cumulative_counts(validate_log(config, log));

    const auto rows = scatter_export(counts, 40, true);
    CHECK(rows.size() == 196);
    bool found_38_40 = false;
    bool found_40_38 = false;
    for (const PairObservation& pair : rows) {
        if (pair.i == 8 && pair.j == 3 && pair.tokens_received == 38 && pair.tokens_given == 40)
            found_38_40 = true;
        if (pair.i == 3 && pair.j == 8 && pair.tokens_received == 40 && pair.tokens_given == 38)
            found_40_38 = true;
        if (pair.self_pair) CHECK(pair.tokens_received == pair.tokens_given);
    }
    CHECK(found_38_40);
    CHECK(found_40_38);
    CHECK(scatter_export(counts, 40, false).size() == 182);
}

TEST_CASE("consecutive scatters differ exactly by the round's receipts") {
    const GameConfig config = synthetic::balanced_config(8, 12, 0);
    const CumulativeCounts counts = cumulative_counts(
        validate_log(config, simulate_null_game(config, SeedSpec{16, 0})));
    for (int t = 1; t < 12; ++t) {
        const auto before = scatter_export(counts, t, true);
        const auto after = scatter_export(counts, t + 1, true);
        REQUIRE(before.size() == after.size());
        std::set<std::pair<int, int>> changed;
        for (std::size_t r = 0; r < before.size(); ++r) {
            if (before[r].tokens_received != after[r].tokens_received)
                changed.insert({before[r].i, before[r].j});
        }
        // one receipt per giver in round t+1
        std::set<std::pair<int, int>> expected;
        for (int giver = 1; giver <= 8; ++giver) {
            for (int receiver = 1; receiver <= 8; ++receiver)
                if (counts.y(receiver, giver, t + 1) - counts.y(receiver, giver, t) == 1)
                    expected.insert({receiver, giver});
        }
        CHECK(changed == expected);
        CHECK(changed.size() == 8);
    }
}

TEST_CASE("residual export") {
    // Exact reciprocal fit: received == given on every pair, so the
    // reciprocity model interpolates and every residual is zero.
    const CumulativeCounts diagonal = cumulative_counts(diagonal_game());
    const auto zero_residuals = residual_export(diagonal, ModelVariant::Reciprocity, 4);
    REQUIRE(zero_residuals.size() == 12);
    for (double residual : zero_residuals) CHECK(std::abs(residual) < 1e-12);

    const GameConfig config = synthetic::balanced_config();
    const CumulativeCounts counts = cumulative_counts(
        validate_log(config, simulate_null_game(config, SeedSpec{17, 0})));
    for (int t : {10, 25, 40}) {
        const auto residuals = residual_export(counts, ModelVariant::Additive, t);
        CHECK(residuals.size() == 182);
        double sum = 0.0;
        for (double residual : residuals) sum += residual;
        CHECK(std::abs(sum) < 1e-8);
    }
}
