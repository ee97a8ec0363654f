#include "rlcut/baseline.hpp"

namespace rlcut {

BaselineResult kmeans_baseline(const Graph& g, const Matrix& features, int k, std::uint64_t seed,
                               CutDenominator denom) {
    KMeansConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    cfg.metric = KMeansMetric::Euclidean;
    Partitioning p(g.num_nodes, k, kmeans(features, cfg));
    std::array<CutReport, 4> reports = {
        evaluate(g, p, ObjectiveKind::KMinCut, denom),
        evaluate(g, p, ObjectiveKind::NormalizedCut, denom),
        evaluate(g, p, ObjectiveKind::BalancedCut, denom),
        evaluate(g, p, ObjectiveKind::SparsestCut, denom),
    };
    return {std::move(p), std::move(reports)};
}

}  // namespace rlcut
