#include "rlcut/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "rlcut/errors.hpp"

namespace rlcut {

namespace {

double point_dist(const double* a, const double* b, int d, KMeansMetric metric) {
    if (metric == KMeansMetric::LInf) {
        double m = 0;
        for (int i = 0; i < d; ++i) m = std::max(m, std::abs(a[i] - b[i]));
        return m;
    }
    double s = 0;
    for (int i = 0; i < d; ++i) {
        double diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;  // squared distance; argmin is what matters
}

int nearest(const Matrix& pts, int p, const Matrix& centroids, KMeansMetric metric) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int c = 0; c < centroids.rows; ++c) {
        double d = point_dist(pts.row(p), centroids.row(c), pts.cols, metric);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

}  // namespace

std::vector<int> kmeans(const Matrix& points, const KMeansConfig& cfg) {
    int n = points.rows, d = points.cols, k = cfg.k;
    if (k < 1) throw ConfigError("k must be >= 1");
    if (k > n) throw ConfigError("k=" + std::to_string(k) + " exceeds point count " + std::to_string(n));
    if (d < 1) throw ConfigError("points need at least one dimension");

    // Initial centroids: k distinct points by seed.
    std::mt19937_64 rng(cfg.seed);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    Matrix centroids(k, d);
    for (int c = 0; c < k; ++c)
        std::copy(points.row(ids[c]), points.row(ids[c]) + d, centroids.row(c));

    std::vector<int> assign(n, -1);
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        bool changed = false;
        for (int p = 0; p < n; ++p) {
            int c = nearest(points, p, centroids, cfg.metric);
            if (c != assign[p]) {
                assign[p] = c;
                changed = true;
            }
        }
        std::vector<int> count(k, 0);
        for (int c : assign) ++count[c];

        // Empty-cluster repair: steal the point of the largest cluster that
        // lies farthest from that cluster's centroid.
        for (int c = 0; c < k; ++c) {
            if (count[c] > 0) continue;
            int big = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
            int far_pt = -1;
            double far_d = -1;
            for (int p = 0; p < n; ++p) {
                if (assign[p] != big) continue;
                double dd = point_dist(points.row(p), centroids.row(big), d, cfg.metric);
                if (dd > far_d) {
                    far_d = dd;
                    far_pt = p;
                }
            }
            assign[far_pt] = c;
            --count[big];
            ++count[c];
            changed = true;
        }

        centroids.fill(0.0);
        for (int p = 0; p < n; ++p)
            for (int i = 0; i < d; ++i) centroids.at(assign[p], i) += points.at(p, i);
        for (int c = 0; c < k; ++c)
            for (int i = 0; i < d; ++i) centroids.at(c, i) /= count[c];

        if (!changed) break;
    }
    return assign;
}

Partitioning warm_start(const Graph& g, const InitialEmbeddings& emb, int k, std::uint64_t seed) {
    KMeansConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    cfg.metric = KMeansMetric::LInf;
    return Partitioning(g.num_nodes, k, kmeans(emb.matrix, cfg));
}

Partitioning random_partitioning(const Graph& g, int k, std::uint64_t seed) {
    int n = g.num_nodes;
    if (k > n) throw ConfigError("k exceeds node count");
    std::mt19937_64 rng(seed);
    std::vector<int> assign(n);
    // One node pinned per partition keeps every partition non-empty.
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (int i = 0; i < n; ++i) assign[ids[i]] = i < k ? i : pick(rng);
    return Partitioning(n, k, assign);
}

}  // namespace rlcut
