#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rlcut/graph.hpp"

namespace rlcut {

/// Priority class for node selection. Infinite beats Finite beats Zero;
/// Zero holds degree-0 nodes and nodes with no foreign-partition neighbors.
enum class PriorityTier { Infinite, Finite, Zero };

struct NodeScoreTable {
    std::vector<double> scores;        // tier-internal ordering key, >= 0
    std::vector<PriorityTier> tiers;
};

/// Scores every node by the ratio of its largest foreign-partition neighbor
/// count to its same-partition neighbor count, normalized by degree. Nodes
/// with no same-partition neighbors (undefined ratio) land in the Infinite
/// tier keyed by foreign-count/degree.
NodeScoreTable node_scores(const Graph& g, const Partitioning& p);

/// Highest-priority unvisited node: tier first, score within tier, lowest id
/// on ties. Empty when every node is visited (sweep exhausted).
std::optional<int> select_node(const NodeScoreTable& table, const std::vector<bool>& visited);

/// Uniform over unvisited nodes; the `--node-select random` ablation.
std::optional<int> random_select_node(const Graph& g, const std::vector<bool>& visited,
                                      std::mt19937_64& rng);

}  // namespace rlcut
