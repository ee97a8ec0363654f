#include "rlcut/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <random>

#include "rlcut/errors.hpp"

namespace rlcut {

SbmGraph sbm_generate(const SbmSpec& spec) {
    if (spec.blocks < 1 || spec.block_size < 1) throw ConfigError("blocks and block_size must be >= 1");
    if (spec.p_out < 0 || spec.p_in > 1 || spec.p_out > spec.p_in)
        throw ConfigError("need 0 <= p_out <= p_in <= 1");

    int n = spec.blocks * spec.block_size;
    std::vector<int> label(n);
    for (int v = 0; v < n; ++v) label[v] = v / spec.block_size;

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double p = label[u] == label[v] ? spec.p_in : spec.p_out;
            if (u01(rng) < p) edges.emplace_back(u, v);
        }
    Graph full = Graph::from_edges(n, std::move(edges));

    auto kept = largest_component_nodes(full);
    SbmGraph out;
    out.graph = induced_subgraph(full, kept);
    out.labels.reserve(kept.size());
    for (int v : kept) out.labels.push_back(label[v]);
    return out;
}

ObjectiveValue planted_objective(const SbmGraph& s, ObjectiveKind kind, CutDenominator denom) {
    // Component extraction can wipe out whole blocks; compact the labels.
    std::vector<int> remap(*std::max_element(s.labels.begin(), s.labels.end()) + 1, -1);
    int k = 0;
    std::vector<int> assign(s.labels.size());
    for (std::size_t v = 0; v < s.labels.size(); ++v) {
        if (remap[s.labels[v]] < 0) remap[s.labels[v]] = k++;
        assign[v] = remap[s.labels[v]];
    }
    Partitioning p(s.graph.num_nodes, k, assign);
    CutReport rep = evaluate(s.graph, p, kind, denom);
    return {rep.value, rep.degenerate};
}

BruteForceResult brute_force(const Graph& g, int k, ObjectiveKind kind, CutDenominator denom) {
    int n = g.num_nodes;
    if (n > 12)
        throw SizeGuardError("brute force limited to 12 nodes, got " + std::to_string(n));
    if (k < 1 || k > n) throw ConfigError("need 1 <= k <= |V|");

    // Restricted growth strings: node 0 is always in partition 0 and node v
    // may open at most one new partition, which kills the relabel factor.
    std::vector<int> assign(n, 0);
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<int> best_assign;

    auto consider = [&]() {
        int used = 0;
        for (int v = 0; v < n; ++v) used = std::max(used, assign[v] + 1);
        if (used != k) return;
        Partitioning p(n, k, assign);
        CutReport rep = evaluate(g, p, kind, denom);
        if (rep.degenerate) return;
        if (rep.value < best_value) {
            best_value = rep.value;
            best_assign = assign;
        }
    };

    // Depth-first enumeration in lexicographic order; the first optimum
    // found is the lexicographically smallest.
    std::function<void(int, int)> rec = [&](int node, int used) {
        if (node == n) {
            consider();
            return;
        }
        int limit = std::min(used, k - 1);  // label `used` opens a new partition
        for (int c = 0; c <= limit; ++c) {
            assign[node] = c;
            rec(node + 1, std::max(used, c + 1));
        }
    };
    if (n == 1) {
        consider();
    } else {
        rec(1, 1);
    }

    if (best_assign.empty())
        throw ConfigError("every surjective assignment is degenerate for this objective");
    return {best_value, Partitioning(n, k, best_assign)};
}

}  // namespace rlcut
