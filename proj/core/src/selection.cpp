#include "rlcut/selection.hpp"

#include <algorithm>

namespace rlcut {

NodeScoreTable node_scores(const Graph& g, const Partitioning& p) {
    int n = g.num_nodes;
    NodeScoreTable table;
    table.scores.assign(n, 0.0);
    table.tiers.assign(n, PriorityTier::Zero);

    std::vector<int> count(p.k(), 0);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        int own = p.part_of(v);
        for (int u : g.neighbors(v)) ++count[p.part_of(u)];
        int same = count[own];
        int max_other = 0;
        for (int q = 0; q < p.k(); ++q)
            if (q != own) max_other = std::max(max_other, count[q]);
        for (int u : g.neighbors(v)) count[p.part_of(u)] = 0;

        if (max_other == 0) continue;  // stays Zero
        if (same == 0) {
            table.tiers[v] = PriorityTier::Infinite;
            table.scores[v] = static_cast<double>(max_other) / g.degree(v);
        } else {
            table.tiers[v] = PriorityTier::Finite;
            table.scores[v] =
                (static_cast<double>(max_other) / same) / static_cast<double>(g.degree(v));
        }
    }
    return table;
}

std::optional<int> select_node(const NodeScoreTable& table, const std::vector<bool>& visited) {
    int best = -1;
    for (int v = 0; v < static_cast<int>(table.scores.size()); ++v) {
        if (visited[v]) continue;
        if (best < 0) {
            best = v;
            continue;
        }
        auto tv = static_cast<int>(table.tiers[v]);
        auto tb = static_cast<int>(table.tiers[best]);
        if (tv < tb || (tv == tb && table.scores[v] > table.scores[best])) best = v;
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<int> random_select_node(const Graph& g, const std::vector<bool>& visited,
                                      std::mt19937_64& rng) {
    std::vector<int> pool;
    for (int v = 0; v < g.num_nodes; ++v)
        if (!visited[v]) pool.push_back(v);
    if (pool.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

}  // namespace rlcut
