#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rlcut/graph.hpp"
#include "rlcut/objectives.hpp"

namespace rlcut {

struct SbmSpec {
    int blocks = 5;
    int block_size = 100;
    double p_in = 0.2;
    double p_out = 0.002;
    std::uint64_t seed = 0;
};

struct SbmGraph {
    Graph graph;
    std::vector<int> labels;  // planted block per node, post component extraction
};

/// Planted-partition stochastic block model: each intra-block pair is an
/// edge with probability p_in, inter-block with p_out, independently.
/// The result is restricted to its largest connected component with the
/// labels filtered to match.
SbmGraph sbm_generate(const SbmSpec& spec);

/// Objective value of the planted block partitioning.
ObjectiveValue planted_objective(const SbmGraph& s, ObjectiveKind kind,
                                 CutDenominator denom = CutDenominator::EdgeCount);

struct BruteForceResult {
    double value;
    Partitioning partitioning;
};

/// Exhaustive optimum over all surjective k-partitionings, canonicalized by
/// first-occurrence order to skip the k! relabelings. Degenerate
/// assignments are excluded for ratio objectives. Hard |V| <= 12 guard.
BruteForceResult brute_force(const Graph& g, int k, ObjectiveKind kind,
                             CutDenominator denom = CutDenominator::EdgeCount);

}  // namespace rlcut
