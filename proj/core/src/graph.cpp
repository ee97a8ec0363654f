#include "rlcut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "rlcut/errors.hpp"

namespace rlcut {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    Graph g;
    g.num_nodes = n;
    for (auto& [u, v] : edge_list) {
        if (u == v) throw ConfigError("self-loop on node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ConfigError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    g.edges = std::move(edge_list);
    g.adjacency.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    g.degrees.resize(n);
    for (int v = 0; v < n; ++v) g.degrees[v] = static_cast<int>(g.adjacency[v].size());
    return g;
}

Partitioning::Partitioning(int num_nodes, int k, const std::vector<int>& assignment)
    : k_(k), assignment_(assignment), members_(k) {
    if (static_cast<int>(assignment.size()) != num_nodes)
        throw DimensionError("assignment length " + std::to_string(assignment.size()) +
                             " != num_nodes " + std::to_string(num_nodes));
    for (int v = 0; v < num_nodes; ++v) {
        int p = assignment_[v];
        if (p < 0 || p >= k) throw ConfigError("partition index out of range for node " + std::to_string(v));
        members_[p].push_back(v);
    }
}

void Partitioning::move(int v, int to) {
    int from = assignment_[v];
    if (from == to) return;
    auto& src = members_[from];
    src.erase(std::lower_bound(src.begin(), src.end(), v));
    auto& dst = members_[to];
    dst.insert(std::lower_bound(dst.begin(), dst.end(), v), v);
    assignment_[v] = to;
}

bool Partitioning::consistent() const {
    std::size_t total = 0;
    for (int l = 0; l < k_; ++l) {
        total += members_[l].size();
        if (!std::is_sorted(members_[l].begin(), members_[l].end())) return false;
        for (int v : members_[l])
            if (assignment_[v] != l) return false;
    }
    return total == assignment_.size();
}

LoadedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list: " + path);

    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    int self_loops = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::int64_t u, v;
        if (!(ls >> u >> v)) throw ParseError(path + ":" + std::to_string(lineno) + ": expected two integer node ids");
        std::string rest;
        if (ls >> rest) throw ParseError(path + ":" + std::to_string(lineno) + ": trailing token '" + rest + "'");
        if (u == v) {
            ++self_loops;
            continue;
        }
        raw.emplace_back(u, v);
    }
    if (raw.empty() && self_loops == 0) throw ParseError("empty edge list: " + path);

    std::map<std::int64_t, int> relabel;
    for (auto [u, v] : raw) {
        relabel.emplace(u, 0);
        relabel.emplace(v, 0);
    }
    LoadedGraph out;
    out.self_loops_dropped = self_loops;
    out.original_ids.reserve(relabel.size());
    int next = 0;
    for (auto& [orig, idx] : relabel) {
        idx = next++;
        out.original_ids.push_back(orig);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.emplace_back(relabel[u], relabel[v]);
    out.graph = Graph::from_edges(next, std::move(edges));
    return out;
}

FeatureMatrix load_features(const std::string& path, const LoadedGraph& loaded) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open feature file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> row;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t pos = 0;
                double val = std::stod(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                row.push_back(val);
            } catch (const std::exception&) {
                throw ParseError(path + ":" + std::to_string(lineno) + ": non-numeric token '" + tok + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    int n = loaded.graph.num_nodes;
    if (static_cast<int>(rows.size()) != n)
        throw DimensionError(path + ": " + std::to_string(rows.size()) + " feature rows for " +
                             std::to_string(n) + " nodes");
    std::size_t d = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != d)
            throw DimensionError(path + ": row " + std::to_string(i) + " has " +
                                 std::to_string(rows[i].size()) + " values, expected " + std::to_string(d));
    FeatureMatrix x(n, static_cast<int>(d));
    for (int i = 0; i < n; ++i)
        std::copy(rows[i].begin(), rows[i].end(), x.row(i));
    return x;
}

std::vector<int> largest_component_nodes(const Graph& g) {
    std::vector<int> comp(g.num_nodes, -1);
    int ncomp = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.num_nodes; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adjacency[u])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<int> size(ncomp, 0);
    for (int v = 0; v < g.num_nodes; ++v) ++size[comp[v]];
    // Largest component; ties go to the one containing the smallest node id,
    // which is the first-discovered one under the ascending scan above.
    int best = 0;
    for (int c = 1; c < ncomp; ++c)
        if (size[c] > size[best]) best = c;
    std::vector<int> kept;
    kept.reserve(size[best]);
    for (int v = 0; v < g.num_nodes; ++v)
        if (comp[v] == best) kept.push_back(v);
    return kept;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& kept) {
    std::vector<int> newid(g.num_nodes, -1);
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) newid[kept[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (newid[u] >= 0 && newid[v] >= 0) edges.emplace_back(newid[u], newid[v]);
    return Graph::from_edges(static_cast<int>(kept.size()), std::move(edges));
}

FeatureMatrix filter_rows(const FeatureMatrix& x, const std::vector<int>& kept) {
    FeatureMatrix out(static_cast<int>(kept.size()), x.cols);
    for (int i = 0; i < out.rows; ++i)
        std::copy(x.row(kept[i]), x.row(kept[i]) + x.cols, out.row(i));
    return out;
}

LoadedGraph largest_connected_component(const LoadedGraph& loaded) {
    auto kept = largest_component_nodes(loaded.graph);
    LoadedGraph out;
    out.graph = induced_subgraph(loaded.graph, kept);
    out.original_ids.reserve(kept.size());
    for (int v : kept) out.original_ids.push_back(loaded.original_ids[v]);
    out.self_loops_dropped = loaded.self_loops_dropped;
    return out;
}

}  // namespace rlcut
