#pragma once

#include <cstdint>
#include <vector>

#include "rlcut/graph.hpp"
#include "rlcut/posenc.hpp"

namespace rlcut {

enum class KMeansMetric { LInf, Euclidean };

struct KMeansConfig {
    int k = 2;
    int max_iters = 100;
    std::uint64_t seed = 0;
    KMeansMetric metric = KMeansMetric::LInf;
};

/// Lloyd iteration with a configurable assignment metric and mean centroid
/// update. Initial centroids are k distinct input points chosen by seed;
/// equidistant ties go to the lowest centroid index; a cluster that empties
/// is reseeded from the largest cluster. Returns a per-point cluster index
/// with every cluster non-empty.
std::vector<int> kmeans(const Matrix& points, const KMeansConfig& cfg);

/// K-means (L-inf metric) over the initial embeddings; the warm-start
/// partitioning for the perturbation loop.
Partitioning warm_start(const Graph& g, const InitialEmbeddings& emb, int k, std::uint64_t seed);

/// Seeded uniform assignment with every partition non-empty; the
/// `--init random` ablation counterpart of warm_start.
Partitioning random_partitioning(const Graph& g, int k, std::uint64_t seed);

}  // namespace rlcut
