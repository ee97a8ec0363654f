#pragma once

#include <cstdint>
#include <string>

#include "rlcut/graph.hpp"
#include "rlcut/matrix.hpp"

namespace rlcut {

/// Writes "node_id partition_id" lines using the original (pre-relabel) ids.
void write_partition(const std::string& path, const LoadedGraph& loaded, const Partitioning& p);

/// Reads a partition file back against a loaded graph. Every node of the
/// graph must appear exactly once; unknown ids are a validation error.
Partitioning read_partition(const std::string& path, const LoadedGraph& loaded);

/// Edge list in the load_edge_list format, original ids.
void write_edge_list(const std::string& path, const LoadedGraph& loaded);

/// One row per node, space-separated, full double precision.
void write_matrix(const std::string& path, const Matrix& m);

/// FNV-1a 64-bit content digest, hex; used by run manifests.
std::string file_digest(const std::string& path);

}  // namespace rlcut
