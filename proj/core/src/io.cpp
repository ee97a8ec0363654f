#include "rlcut/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rlcut/errors.hpp"

namespace rlcut {

void write_partition(const std::string& path, const LoadedGraph& loaded, const Partitioning& p) {
    if (p.num_nodes() != loaded.graph.num_nodes)
        throw DimensionError("partitioning size does not match graph");
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write partition file: " + path);
    for (int v = 0; v < p.num_nodes(); ++v)
        out << loaded.original_ids[v] << ' ' << p.part_of(v) << '\n';
}

Partitioning read_partition(const std::string& path, const LoadedGraph& loaded) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open partition file: " + path);
    std::map<std::int64_t, int> by_orig;
    for (int v = 0; v < loaded.graph.num_nodes; ++v) by_orig[loaded.original_ids[v]] = v;

    std::vector<int> assign(loaded.graph.num_nodes, -1);
    int k = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::int64_t id;
        int part;
        if (!(ls >> id >> part) || part < 0)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'node_id partition_id'");
        auto it = by_orig.find(id);
        if (it == by_orig.end())
            throw ParseError(path + ":" + std::to_string(lineno) + ": unknown node id " + std::to_string(id));
        assign[it->second] = part;
        k = std::max(k, part + 1);
    }
    for (int v = 0; v < loaded.graph.num_nodes; ++v)
        if (assign[v] < 0)
            throw ParseError(path + ": node " + std::to_string(loaded.original_ids[v]) +
                             " missing from partition file");
    return Partitioning(loaded.graph.num_nodes, k, assign);
}

void write_edge_list(const std::string& path, const LoadedGraph& loaded) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write edge list: " + path);
    for (auto [u, v] : loaded.graph.edges)
        out << loaded.original_ids[u] << ' ' << loaded.original_ids[v] << '\n';
}

void write_matrix(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write matrix file: " + path);
    out.precision(17);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) out << (c ? " " : "") << m.at(r, c);
        out << '\n';
    }
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open for digest: " + path);
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
        if (!in) break;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace rlcut
