#include "tokennet/infer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tokennet/parallel.hpp"

namespace tokennet {

const std::vector<double>& NullDistribution::samples_for(std::string_view coef) const {
    for (std::size_t c = 0; c < coef_names.size(); ++c)
        if (coef_names[c] == coef) return samples[c];
    throw UnknownCoefficient(std::string(coef));
}

double percentile(std::vector<double> samples, double q) {
    if (samples.empty()) throw Error("percentile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw Error("percentile level outside [0, 1]");
    std::sort(samples.begin(), samples.end());
    const std::size_t m = samples.size();
    const double position = static_cast<double>(m - 1) * q;
    const std::size_t lower = static_cast<std::size_t>(position);
    if (lower + 1 >= m) return samples[m - 1];
    const double fraction = position - static_cast<double>(lower);
    return samples[lower] + fraction * (samples[lower + 1] - samples[lower]);
}

namespace {

// Shared assembly: replicate k's trajectory is produced by `make_log(k)`.
template <typename MakeLog>
NullTrajectories collect_trajectories(const GameConfig& config, ModelVariant variant,
                                      int n_replicates, std::uint64_t master_seed, int threads,
                                      MakeLog&& make_log) {
    if (n_replicates < 1) throw Error("n_replicates must be >= 1");
    std::vector<Trajectory> trajectories(static_cast<std::size_t>(n_replicates));
    parallel_for_indexed(n_replicates, threads, [&](int k) {
        ValidatedGame game = validate_log(config, make_log(k));
        trajectories[static_cast<std::size_t>(k)] =
            fit_trajectory(CumulativeCounts(game), variant);
    });
    return NullTrajectories(variant, config.n_rounds, master_seed, std::move(trajectories));
}

}  // namespace

NullDistribution NullTrajectories::distribution_at(int t) const {
    if (t < 1 || t > n_rounds_) throw RoundOutOfRange(t, n_rounds_);
    NullDistribution dist;
    dist.variant = variant_;
    dist.round = t;
    dist.coef_names = coefficient_names(variant_);
    dist.n_requested = size();
    dist.master_seed = master_seed_;
    dist.samples.resize(dist.coef_names.size());
    for (int k = 0; k < size(); ++k) {
        const Trajectory& trajectory = trajectories_[static_cast<std::size_t>(k)];
        if (trajectory.is_degenerate(t)) {
            ++dist.n_excluded;
            continue;
        }
        dist.replicate_ids.push_back(k);
        for (std::size_t c = 0; c < dist.samples.size(); ++c)
            dist.samples[c].push_back(trajectory.coefficient(t, static_cast<int>(c)));
    }
    if (dist.replicate_ids.empty())
        throw AllFitsDegenerate("all " + std::to_string(size()) +
                                " replicate fits at round " + std::to_string(t) +
                                " were degenerate");
    return dist;
}

BandTrajectory NullTrajectories::bands() const {
    BandTrajectory bands;
    bands.variant = variant_;
    bands.coef_names = coefficient_names(variant_);
    bands.n_rounds = n_rounds_;
    const int p = bands.n_coefficients();
    const std::size_t cells = static_cast<std::size_t>(n_rounds_) * p;
    bands.lo.assign(cells, std::numeric_limits<double>::quiet_NaN());
    bands.mean.assign(cells, std::numeric_limits<double>::quiet_NaN());
    bands.hi.assign(cells, std::numeric_limits<double>::quiet_NaN());
    bands.n_excluded.assign(static_cast<std::size_t>(n_rounds_), 0);

    std::vector<double> column;
    column.reserve(trajectories_.size());
    for (int t = 1; t <= n_rounds_; ++t) {
        int excluded = 0;
        for (int c = 0; c < p; ++c) {
            column.clear();
            excluded = 0;
            double sum = 0.0;
            for (const Trajectory& trajectory : trajectories_) {
                if (trajectory.is_degenerate(t)) {
                    ++excluded;
                    continue;
                }
                const double value = trajectory.coefficient(t, c);
                column.push_back(value);
                sum += value;
            }
            if (column.empty()) continue;
            const std::size_t cell = static_cast<std::size_t>(t - 1) * p + c;
            bands.lo[cell] = percentile(column, 0.025);
            bands.hi[cell] = percentile(column, 0.975);
            bands.mean[cell] = sum / static_cast<double>(column.size());
        }
        bands.n_excluded[static_cast<std::size_t>(t - 1)] = excluded;
    }
    return bands;
}

NullDistribution null_distribution(const GameConfig& config, ModelVariant variant, int t,
                                   int n_replicates, std::uint64_t master_seed, int threads) {
    config.check();
    if (t < 1 || t > config.n_rounds) throw RoundOutOfRange(t, config.n_rounds);
    if (n_replicates < 100) throw Error("null_distribution needs at least 100 replicates");

    const int p = coefficient_count(variant);
    std::vector<double> values(static_cast<std::size_t>(n_replicates) * p);
    std::vector<std::uint8_t> degenerate(static_cast<std::size_t>(n_replicates), 0);
    parallel_for_indexed(n_replicates, threads, [&](int k) {
        const ValidatedGame game = validate_log(
            config,
            simulate_null_game(config, SeedSpec{master_seed, static_cast<std::uint64_t>(k)}));
        const FitResult fit = fit_at_round(CumulativeCounts(game), variant, t);
        if (fit.degenerate) {
            degenerate[static_cast<std::size_t>(k)] = 1;
            return;
        }
        for (int c = 0; c < p; ++c)
            values[static_cast<std::size_t>(k) * p + c] =
                fit.coefficients[static_cast<std::size_t>(c)];
    });

    NullDistribution dist;
    dist.variant = variant;
    dist.round = t;
    dist.coef_names = coefficient_names(variant);
    dist.n_requested = n_replicates;
    dist.master_seed = master_seed;
    dist.samples.resize(static_cast<std::size_t>(p));
    for (int k = 0; k < n_replicates; ++k) {
        if (degenerate[static_cast<std::size_t>(k)]) {
            ++dist.n_excluded;
            continue;
        }
        dist.replicate_ids.push_back(k);
        for (int c = 0; c < p; ++c)
            dist.samples[static_cast<std::size_t>(c)].push_back(
                values[static_cast<std::size_t>(k) * p + c]);
    }
    if (dist.replicate_ids.empty())
        throw AllFitsDegenerate("all " + std::to_string(n_replicates) +
                                " replicate fits at round " + std::to_string(t) +
                                " were degenerate");
    return dist;
}

double empirical_p(double observed, const NullDistribution& dist, std::string_view coef) {
    const std::vector<double>& samples = dist.samples_for(coef);
    const double m = static_cast<double>(samples.size());
    std::size_t below_or_equal = 0;
    std::size_t above_or_equal = 0;
    for (double sample : samples) {
        if (sample <= observed) ++below_or_equal;
        if (sample >= observed) ++above_or_equal;
    }
    const double left = (1.0 + static_cast<double>(below_or_equal)) / (m + 1.0);
    const double right = (1.0 + static_cast<double>(above_or_equal)) / (m + 1.0);
    return std::min(1.0, 2.0 * std::min(left, right));
}

std::pair<double, double> bounds95(const NullDistribution& dist, std::string_view coef) {
    const std::vector<double>& samples = dist.samples_for(coef);
    return {percentile(samples, 0.025), percentile(samples, 0.975)};
}

NullTrajectories collect_null_trajectories(const GameConfig& config, ModelVariant variant,
                                           int n_replicates, std::uint64_t master_seed,
                                           int threads) {
    config.check();
    return collect_trajectories(config, variant, n_replicates, master_seed, threads, [&](int k) {
        return simulate_null_game(config, SeedSpec{master_seed, static_cast<std::uint64_t>(k)});
    });
}

NullTrajectories collect_replay_trajectories(const ValidatedGame& game,
                                             const std::vector<int>& replaced,
                                             ModelVariant variant, int n_replicates,
                                             std::uint64_t master_seed, int threads) {
    // Validate the replaced set once up front rather than n_replicates times.
    for (int player : replaced)
        if (player < 1 || player > game.config().n_players) throw UnknownPlayer(player);
    return collect_trajectories(game.config(), variant, n_replicates, master_seed, threads,
                                [&](int k) {
                                    return replay_with_null_players(
                                        game, replaced,
                                        SeedSpec{master_seed, static_cast<std::uint64_t>(k)});
                                });
}

BandTrajectory null_bands(const GameConfig& config, ModelVariant variant, int n_replicates,
                          std::uint64_t master_seed, int threads) {
    return collect_null_trajectories(config, variant, n_replicates, master_seed, threads).bands();
}

}  // namespace tokennet
