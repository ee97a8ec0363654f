#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rlcut/graph.hpp"

namespace rlcut {

struct PosConfig {
    int alpha = 35;       // anchor count
    int beta = 100;       // restart-walk iterations
    double c = 0.85;      // continuation probability
    std::uint64_t seed = 0;
};

/// |V| x alpha matrix of anchor-restart probabilities. Column j is the
/// restart-walk distribution of anchor j, indexed by target node.
struct PositionalEmbedding {
    Matrix matrix;            // row u = pos(u)
    std::vector<int> anchors;
};

/// |V| x (|F| + alpha); row u is X[u] followed by pos(u).
struct InitialEmbeddings {
    Matrix matrix;
    int feature_dim = 0;  // 0 when the graph is featureless
    int alpha = 0;
};

/// Random walk with restart from `anchor`: r0 = e, r <- c*W*r + (1-c)*e for
/// `beta` iterations, W column-stochastic with W[i][j] = 1/degree(j) on
/// edges. The walk never materializes W densely. A single-node graph
/// returns {1}; any other isolated node is a precondition error.
std::vector<double> rwr(const Graph& g, int anchor, double c, int beta);

/// Samples alpha anchors uniformly without replacement (seeded) and stacks
/// their restart-walk vectors column-wise.
PositionalEmbedding lipschitz_embed(const Graph& g, const PosConfig& cfg);

InitialEmbeddings initial_embeddings(const Graph& g, const FeatureMatrix* x,
                                     const PositionalEmbedding& pe);

}  // namespace rlcut
