#pragma once

// CSV assembly for every file format the tool emits. Kept in one place so the
// report bundle and the individual subcommands serialize identically; numbers
// use the shortest round-tripping decimal form.

#include <string>

#include "tokennet/counts.hpp"
#include "tokennet/fit.hpp"
#include "tokennet/infer.hpp"
#include "tokennet/influence.hpp"

namespace tokennet::csv {

/// `round,p_ingroup,p_outgroup,p_self` for t = 1..T.
std::string proportions(const CumulativeCounts& counts);

/// `scope,include_self,pearson_r,defined` at the final round; ingroup with and
/// without self pairs, outgroup without. Undefined correlations keep their row
/// with defined=0.
std::string correlations(const CumulativeCounts& counts);

/// `i,j,tokens_received,tokens_given,cross_group,self_pair` at the final
/// round, self pairs included.
std::string scatter(const CumulativeCounts& counts);

/// `i,j,residual` at one round; header only when the fit is degenerate.
std::string residuals_at(const CumulativeCounts& counts, ModelVariant variant, int t);

/// `t,i,j,residual` for t in {10, 25, 40} clipped to the game length.
std::string residuals_bundle(const CumulativeCounts& counts, ModelVariant variant);

/// `round,coef_name,value,r_squared,degenerate` for one fitted round.
std::string fit(const FitResult& fit, int round);

/// Same schema over all rounds of a trajectory.
std::string trajectory(const Trajectory& trajectory);

/// `model,round,coef_name,value,r_squared,degenerate` for all four variants.
std::string all_trajectories(const CumulativeCounts& counts);

/// `coef,replicate,value`, usable replicates only, original indices.
std::string null_distribution(const NullDistribution& dist);

/// `coef,estimate,p_value,lo95,hi95` for a non-degenerate observed fit.
std::string tests(const FitResult& observed, const NullDistribution& dist);

/// `round,coef,lo,mean,hi`.
std::string bands(const BandTrajectory& bands);

/// `player,d_rho,d_gamma,std_rho,std_gamma,flag_rho,flag_gamma`.
std::string influence(const InfluenceScores& scores);

}  // namespace tokennet::csv
