#include "tokennet/explore.hpp"

#include <cmath>

#include "tokennet/fit.hpp"

namespace tokennet {

SourceProportions source_proportions(const CumulativeCounts& counts, int t) {
    if (t < 1 || t > counts.n_rounds()) throw RoundOutOfRange(t, counts.n_rounds());
    const int n = counts.n_players();
    std::int64_t self_tokens = 0;
    std::int64_t ingroup_tokens = 0;
    std::int64_t outgroup_tokens = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const std::int64_t received = counts.y(i, j, t);
            if (i == j)
                self_tokens += received;
            else if (counts.g(i, j) == 0)
                ingroup_tokens += received;
            else
                outgroup_tokens += received;
        }
    }
    const double total = static_cast<double>(n) * static_cast<double>(t);
    return SourceProportions{static_cast<double>(ingroup_tokens) / total,
                             static_cast<double>(outgroup_tokens) / total,
                             static_cast<double>(self_tokens) / total};
}

std::optional<double> reciprocity_correlation(const CumulativeCounts& counts, int t,
                                              PairScope scope, bool include_self) {
    if (t < 1 || t > counts.n_rounds()) throw RoundOutOfRange(t, counts.n_rounds());
    const int n = counts.n_players();

    std::vector<double> received;
    std::vector<double> given;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j && (!include_self || scope != PairScope::Ingroup)) continue;
            const bool cross = counts.g(i, j) != 0;
            if (scope == PairScope::Ingroup ? cross : !cross) continue;
            received.push_back(static_cast<double>(counts.y(i, j, t)));
            given.push_back(static_cast<double>(counts.y(j, i, t)));
        }
    }
    if (received.empty())
        throw EmptyScope(scope == PairScope::Ingroup
                             ? "no ingroup pairs (single-player groups without self)"
                             : "no outgroup pairs (only one group)");
    if (received.size() < 2) return std::nullopt;

    const double m = static_cast<double>(received.size());
    double mean_received = 0.0;
    double mean_given = 0.0;
    for (std::size_t k = 0; k < received.size(); ++k) {
        mean_received += received[k];
        mean_given += given[k];
    }
    mean_received /= m;
    mean_given /= m;

    double covariance = 0.0;
    double var_received = 0.0;
    double var_given = 0.0;
    for (std::size_t k = 0; k < received.size(); ++k) {
        const double dr = received[k] - mean_received;
        const double dg = given[k] - mean_given;
        covariance += dr * dg;
        var_received += dr * dr;
        var_given += dg * dg;
    }
    if (var_received == 0.0 || var_given == 0.0) return std::nullopt;  // constant margin
    return covariance / std::sqrt(var_received * var_given);
}

std::vector<PairObservation> scatter_export(const CumulativeCounts& counts, int t,
                                            bool include_self) {
    return pair_table(counts, t, include_self);
}

std::vector<double> residual_export(const CumulativeCounts& counts, ModelVariant variant, int t,
                                    double tol) {
    return fit_at_round(counts, variant, t, tol).residuals;
}

}  // namespace tokennet
