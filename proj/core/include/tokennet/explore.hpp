#pragma once

#include <optional>
#include <vector>

#include "tokennet/counts.hpp"
#include "tokennet/model.hpp"
#include "tokennet/ols.hpp"

namespace tokennet {

/// Receiver-side split of all tokens given up to a round: ingroup excludes
/// self, self-giving stands alone, the three parts sum to 1.
struct SourceProportions {
    double ingroup = 0.0;
    double outgroup = 0.0;
    double self = 0.0;
};

enum class PairScope {
    Ingroup,   // ordered pairs within a group (self pairs only if included)
    Outgroup,  // ordered pairs across groups (never self)
};

/// Proportion of tokens received from ingroup / outgroup / self up to round t.
/// Throws RoundOutOfRange.
SourceProportions source_proportions(const CumulativeCounts& counts, int t);

/// Pearson correlation between received and given counts over the ordered
/// pairs in scope at round t. Self pairs (only meaningful for the ingroup
/// scope) are excluded by default since they are perfectly correlated by
/// construction. Returns nullopt -- flagged undefined -- when fewer than two
/// pairs remain or a margin is constant; throws EmptyScope when the scope has
/// no pairs at all.
std::optional<double> reciprocity_correlation(const CumulativeCounts& counts, int t,
                                              PairScope scope, bool include_self = false);

/// All ordered pairs at round t with both directed counts, for external
/// scatter plotting; (i, j) and (j, i) are both present.
std::vector<PairObservation> scatter_export(const CumulativeCounts& counts, int t,
                                            bool include_self);

/// Residuals of fit_at_round(counts, variant, t), one per i != j pair in
/// pair-table order, for external histogramming. Empty when the fit is
/// degenerate.
std::vector<double> residual_export(const CumulativeCounts& counts, ModelVariant variant, int t,
                                    double tol = kDefaultRcondTol);

}  // namespace tokennet
