#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tokennet/fit.hpp"
#include "tokennet/simulate.hpp"

namespace tokennet {

/// Coefficient samples under the "give at random" null behaviour at one round:
/// replicate k contributes the fit of a game simulated from
/// SeedSpec{master_seed, k}. Degenerate replicate fits are excluded and
/// counted, never imputed. Samples are stored in replicate-index order, so the
/// distribution is a pure function of (config, variant, round, N, master_seed).
struct NullDistribution {
    ModelVariant variant = ModelVariant::Additive;
    int round = 0;
    std::vector<std::string> coef_names;
    std::vector<int> replicate_ids;            // usable replicates, ascending
    std::vector<std::vector<double>> samples;  // [coefficient][usable replicate]
    int n_requested = 0;
    int n_excluded = 0;
    std::uint64_t master_seed = 0;

    const std::vector<double>& samples_for(std::string_view coef) const;
    int usable() const { return static_cast<int>(replicate_ids.size()); }
};

/// 95% band and null mean per round per coefficient, from one shared set of
/// replicate games whose full trajectories were fitted once each.
struct BandTrajectory {
    ModelVariant variant = ModelVariant::Additive;
    std::vector<std::string> coef_names;
    int n_rounds = 0;
    std::vector<double> lo;    // [(t-1) * n_coefficients + c], 2.5th percentile
    std::vector<double> mean;  // null mean
    std::vector<double> hi;    // 97.5th percentile
    std::vector<int> n_excluded;  // degenerate replicate fits per round

    int n_coefficients() const { return static_cast<int>(coef_names.size()); }
    double lo_at(int t, int c) const { return lo[index(t, c)]; }
    double mean_at(int t, int c) const { return mean[index(t, c)]; }
    double hi_at(int t, int c) const { return hi[index(t, c)]; }

private:
    std::size_t index(int t, int c) const {
        return static_cast<std::size_t>(t - 1) * coef_names.size() + static_cast<std::size_t>(c);
    }
};

/// An ensemble of per-replicate coefficient trajectories (one simulated or
/// replayed game each). Bands and any single-round distribution are read off
/// the same ensemble, so the band at round t always agrees with the
/// distribution at round t for the same seed.
class NullTrajectories {
public:
    NullTrajectories(ModelVariant variant, int n_rounds, std::uint64_t master_seed,
                     std::vector<Trajectory> trajectories)
        : variant_(variant),
          n_rounds_(n_rounds),
          master_seed_(master_seed),
          trajectories_(std::move(trajectories)) {}

    int size() const { return static_cast<int>(trajectories_.size()); }
    int n_rounds() const { return n_rounds_; }
    ModelVariant variant() const { return variant_; }
    std::uint64_t master_seed() const { return master_seed_; }
    const Trajectory& at(int k) const { return trajectories_[static_cast<std::size_t>(k)]; }

    NullDistribution distribution_at(int t) const;  // throws RoundOutOfRange, AllFitsDegenerate
    BandTrajectory bands() const;

private:
    ModelVariant variant_;
    int n_rounds_;
    std::uint64_t master_seed_;
    std::vector<Trajectory> trajectories_;
};

/// Percentile with linear interpolation between order statistics at position
/// (M - 1) * q (0-based); this choice is part of the public contract so bounds
/// reproduce across versions. Input need not be sorted. Throws Error on empty
/// input or q outside [0, 1].
double percentile(std::vector<double> samples, double q);

/// Null distribution of the variant's coefficients at round t from
/// n_replicates simulated games (fit at round t only). Requires
/// n_replicates >= 100. Throws AllFitsDegenerate when no usable fit remains.
NullDistribution null_distribution(const GameConfig& config, ModelVariant variant, int t,
                                   int n_replicates, std::uint64_t master_seed, int threads = 0);

/// Two-sided add-one-smoothed empirical tail probability:
///   p = min(1, 2 * min((1 + #{sample <= observed}) / (M + 1),
///                      (1 + #{sample >= observed}) / (M + 1)))
/// Always in (0, 1]. Throws UnknownCoefficient.
double empirical_p(double observed, const NullDistribution& dist, std::string_view coef);

/// (2.5th, 97.5th) percentiles of the coefficient's null samples.
std::pair<double, double> bounds95(const NullDistribution& dist, std::string_view coef);

/// Fits the full trajectory of each of n_replicates null games (replicate k
/// from SeedSpec{master_seed, k}); one set of games serves all rounds.
NullTrajectories collect_null_trajectories(const GameConfig& config, ModelVariant variant,
                                           int n_replicates, std::uint64_t master_seed,
                                           int threads = 0);

/// Same ensemble construction, but each replicate is a semi-simulated replay
/// of `game` with the given players' giving regenerated at random.
NullTrajectories collect_replay_trajectories(const ValidatedGame& game,
                                             const std::vector<int>& replaced,
                                             ModelVariant variant, int n_replicates,
                                             std::uint64_t master_seed, int threads = 0);

/// Bands from collect_null_trajectories.
BandTrajectory null_bands(const GameConfig& config, ModelVariant variant, int n_replicates,
                          std::uint64_t master_seed, int threads = 0);

}  // namespace tokennet
