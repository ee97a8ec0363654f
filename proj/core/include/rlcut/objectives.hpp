#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlcut/graph.hpp"

namespace rlcut {

enum class ObjectiveKind { KMinCut, NormalizedCut, BalancedCut, SparsestCut };

const char* objective_name(ObjectiveKind kind);
ObjectiveKind objective_from_name(const std::string& name);  // throws ConfigError

/// Denominator convention for k-mincut. Each simple edge counts once by
/// default; EndpointCount reads the hyperedge-style sum of edge sizes,
/// which is 2|E| for simple graphs and only rescales the value.
enum class CutDenominator { EdgeCount, EndpointCount };

/// Objective value with an explicit degeneracy flag. Degenerate states
/// (empty partition or zero-volume partition under a ratio objective)
/// carry value = NaN and are never silently fed into rewards.
struct ObjectiveValue {
    double value = 0.0;
    bool degenerate = false;
};

struct CutReport {
    ObjectiveKind objective;
    double value;
    bool degenerate;
    std::vector<std::int64_t> per_partition_cut;
    std::vector<std::int64_t> per_partition_volume;
    std::vector<std::int64_t> per_partition_size;

    /// Flat "key value" text record, one line per key.
    std::string to_text() const;
};

/// Number of edges with exactly one endpoint in partition l.
std::int64_t cut_size(const Graph& g, const Partitioning& p, int l);

/// Sum of degrees over partition l.
std::int64_t volume(const Graph& g, const Partitioning& p, int l);

double k_mincut(const Graph& g, const Partitioning& p,
                CutDenominator denom = CutDenominator::EdgeCount);
ObjectiveValue normalized_cut(const Graph& g, const Partitioning& p);
ObjectiveValue balanced_cut(const Graph& g, const Partitioning& p);
ObjectiveValue sparsest_cut(const Graph& g, const Partitioning& p);

CutReport evaluate(const Graph& g, const Partitioning& p, ObjectiveKind kind,
                   CutDenominator denom = CutDenominator::EdgeCount);

/// Maintains per-partition cut/volume/size counters so that the effect of a
/// single-node move is computable in O(degree(v)) instead of O(|E|).
class ObjectiveTracker {
public:
    ObjectiveTracker(const Graph& g, Partitioning& p, ObjectiveKind kind,
                     CutDenominator denom = CutDenominator::EdgeCount);

    ObjectiveValue value() const;
    /// Objective value the partitioning would have after moving v to `to`.
    ObjectiveValue value_after(int v, int to) const;
    /// value_after - value; NaN when either side is degenerate.
    double delta(int v, int to) const;
    /// Applies the move to both the counters and the owned Partitioning.
    void apply(int v, int to);

    const Partitioning& partitioning() const { return *p_; }
    CutReport report() const;

private:
    struct Counters {
        std::vector<std::int64_t> cut, vol, size;
    };
    ObjectiveValue eval(const Counters& c) const;
    Counters after_move(int v, int to) const;

    const Graph* g_;
    Partitioning* p_;
    ObjectiveKind kind_;
    CutDenominator denom_;
    Counters counters_;
};

/// One-shot convenience wrapper around ObjectiveTracker::delta.
double move_delta(const Graph& g, Partitioning& p, int v, int to, ObjectiveKind kind,
                  CutDenominator denom = CutDenominator::EdgeCount);

}  // namespace rlcut
