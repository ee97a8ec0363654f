#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlcut/matrix.hpp"

namespace rlcut {

/// Immutable undirected simple graph. Node ids are contiguous 0..n-1,
/// adjacency lists are sorted and symmetric, self-loops are forbidden.
struct Graph {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;        // each pair (u,v) with u < v
    std::vector<std::vector<int>> adjacency;       // sorted neighbor lists
    std::vector<int> degrees;

    /// Builds a graph from an edge list after deduplication. Throws
    /// ConfigError on self-loops or out-of-range endpoints.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    int num_edges() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return degrees[v]; }
    const std::vector<int>& neighbors(int v) const { return adjacency[v]; }
};

/// Node feature matrix; rows follow the graph's node ids.
using FeatureMatrix = Matrix;

/// Total assignment of nodes to k labeled partitions. `members` is kept
/// as the exact inverse of `assignment` (sorted per partition).
class Partitioning {
public:
    Partitioning() = default;
    Partitioning(int num_nodes, int k, const std::vector<int>& assignment);

    int k() const { return k_; }
    int num_nodes() const { return static_cast<int>(assignment_.size()); }
    int part_of(int v) const { return assignment_[v]; }
    const std::vector<int>& members(int l) const { return members_[l]; }
    const std::vector<int>& assignment() const { return assignment_; }
    int part_size(int l) const { return static_cast<int>(members_[l].size()); }

    /// Moves v to partition `to`; no-op when v is already there.
    void move(int v, int to);

    /// Checks the assignment/members inverse invariant (test support).
    bool consistent() const;

private:
    int k_ = 0;
    std::vector<int> assignment_;
    std::vector<std::vector<int>> members_;
};

/// A graph loaded from disk plus its relabel map back to the original ids.
struct LoadedGraph {
    Graph graph;
    std::vector<std::int64_t> original_ids;  // original_ids[v] = id in the input file
    int self_loops_dropped = 0;
};

/// Parses a whitespace-separated edge list ("u v" per line, '#' comments).
/// Nodes are relabeled to 0..n-1 by ascending original id; duplicate and
/// reversed-duplicate lines collapse; self-loop lines are dropped and counted.
LoadedGraph load_edge_list(const std::string& path);

/// Reads one feature row per node, ordered by ascending original id.
/// Values may be comma- or whitespace-separated.
FeatureMatrix load_features(const std::string& path, const LoadedGraph& loaded);

/// Induced subgraph on the largest connected component; ties broken by the
/// component containing the smallest node id. Features and the relabel map
/// are row-filtered to the kept nodes.
LoadedGraph largest_connected_component(const LoadedGraph& loaded);
FeatureMatrix filter_rows(const FeatureMatrix& x, const std::vector<int>& kept);

/// Indices (old ids) of the nodes in the largest component, sorted.
std::vector<int> largest_component_nodes(const Graph& g);

/// Induced subgraph on `kept` (sorted old node ids).
Graph induced_subgraph(const Graph& g, const std::vector<int>& kept);

}  // namespace rlcut
