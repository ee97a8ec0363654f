#include "rlcut/posenc.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rlcut/errors.hpp"

namespace rlcut {

std::vector<double> rwr(const Graph& g, int anchor, double c, int beta) {
    int n = g.num_nodes;
    if (anchor < 0 || anchor >= n) throw ConfigError("anchor out of range");
    if (n == 1) return {1.0};
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw ConfigError("restart walk requires positive degrees; node " + std::to_string(v) +
                              " is isolated (run component extraction first)");

    std::vector<double> r(n, 0.0), next(n);
    r[anchor] = 1.0;
    for (int t = 0; t < beta; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int j = 0; j < n; ++j) {
            double share = c * r[j] / g.degree(j);
            for (int i : g.neighbors(j)) next[i] += share;
        }
        next[anchor] += 1.0 - c;
        r.swap(next);
    }
    return r;
}

PositionalEmbedding lipschitz_embed(const Graph& g, const PosConfig& cfg) {
    int n = g.num_nodes;
    if (cfg.alpha < 1 || cfg.beta < 1) throw ConfigError("alpha and beta must be >= 1");
    if (cfg.c <= 0.0 || cfg.c >= 1.0) throw ConfigError("continuation probability must be in (0,1)");
    if (cfg.alpha > n)
        throw ConfigError("alpha=" + std::to_string(cfg.alpha) + " exceeds node count " + std::to_string(n));

    std::mt19937_64 rng(cfg.seed);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(cfg.alpha);

    PositionalEmbedding pe;
    pe.anchors = ids;
    pe.matrix = Matrix(n, cfg.alpha);
    for (int j = 0; j < cfg.alpha; ++j) {
        auto col = rwr(g, ids[j], cfg.c, cfg.beta);
        for (int u = 0; u < n; ++u) pe.matrix.at(u, j) = col[u];
    }
    return pe;
}

InitialEmbeddings initial_embeddings(const Graph& g, const FeatureMatrix* x,
                                     const PositionalEmbedding& pe) {
    int n = g.num_nodes;
    if (pe.matrix.rows != n) throw DimensionError("positional embedding rows do not match node count");
    int f = x ? x->cols : 0;
    if (x && x->rows != n)
        throw DimensionError("feature rows " + std::to_string(x->rows) + " != nodes " + std::to_string(n));
    InitialEmbeddings emb;
    emb.feature_dim = f;
    emb.alpha = pe.matrix.cols;
    emb.matrix = Matrix(n, f + pe.matrix.cols);
    for (int u = 0; u < n; ++u) {
        if (x) std::copy(x->row(u), x->row(u) + f, emb.matrix.row(u));
        std::copy(pe.matrix.row(u), pe.matrix.row(u) + pe.matrix.cols, emb.matrix.row(u) + f);
    }
    return emb;
}

}  // namespace rlcut
