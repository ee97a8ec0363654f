#pragma once

#include <array>
#include <cstdint>

#include "rlcut/graph.hpp"
#include "rlcut/kmeans.hpp"
#include "rlcut/objectives.hpp"

namespace rlcut {

struct BaselineResult {
    Partitioning partitioning;
    std::array<CutReport, 4> reports;  // kmincut, ncut, balanced, sparsest
};

/// Euclidean-metric Lloyd K-means on the raw node features (or on whatever
/// matrix the caller substitutes when the graph is featureless, e.g. the
/// positional embeddings), plus all four objective values of the result.
BaselineResult kmeans_baseline(const Graph& g, const Matrix& features, int k, std::uint64_t seed,
                               CutDenominator denom = CutDenominator::EdgeCount);

}  // namespace rlcut
