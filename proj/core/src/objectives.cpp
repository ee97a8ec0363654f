#include "rlcut/objectives.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rlcut/errors.hpp"

namespace rlcut {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_edges(const Graph& g) {
    if (g.num_edges() == 0) throw ConfigError("objective undefined on an empty edge set");
}

struct RawCounters {
    std::vector<std::int64_t> cut, vol, size;
};

RawCounters count(const Graph& g, const Partitioning& p) {
    int k = p.k();
    RawCounters c{std::vector<std::int64_t>(k, 0), std::vector<std::int64_t>(k, 0),
                  std::vector<std::int64_t>(k, 0)};
    for (auto [u, v] : g.edges) {
        int pu = p.part_of(u), pv = p.part_of(v);
        if (pu != pv) {
            ++c.cut[pu];
            ++c.cut[pv];
        }
    }
    for (int v = 0; v < g.num_nodes; ++v) {
        c.vol[p.part_of(v)] += g.degree(v);
        ++c.size[p.part_of(v)];
    }
    return c;
}

double denom_value(const Graph& g, CutDenominator denom) {
    return denom == CutDenominator::EdgeCount ? static_cast<double>(g.num_edges())
                                              : 2.0 * g.num_edges();
}

double kmincut_from(const std::vector<std::int64_t>& cut, double denom) {
    double total = 0;
    for (auto c : cut) total += static_cast<double>(c);
    return total / denom;
}

ObjectiveValue ncut_from(const std::vector<std::int64_t>& cut, const std::vector<std::int64_t>& vol) {
    double sum = 0;
    for (std::size_t l = 0; l < cut.size(); ++l) {
        if (vol[l] == 0) return {kNaN, true};
        sum += static_cast<double>(cut[l]) / static_cast<double>(vol[l]);
    }
    return {sum, false};
}

ObjectiveValue balanced_from(const std::vector<std::int64_t>& cut, const std::vector<std::int64_t>& vol,
                             const std::vector<std::int64_t>& size, int n) {
    ObjectiveValue nc = ncut_from(cut, vol);
    if (nc.degenerate) return nc;
    double k = static_cast<double>(cut.size());
    double nn = static_cast<double>(n);
    double penalty = 0;
    for (auto s : size) {
        double dev = static_cast<double>(s) - nn / k;
        penalty += dev * dev;
    }
    return {nc.value + penalty / (nn * nn), false};
}

ObjectiveValue sparsest_from(const std::vector<std::int64_t>& cut, const std::vector<std::int64_t>& size,
                             int n) {
    double sum = 0;
    for (std::size_t l = 0; l < cut.size(); ++l) {
        std::int64_t smaller = std::min(size[l], static_cast<std::int64_t>(n) - size[l]);
        if (smaller == 0) return {kNaN, true};
        sum += static_cast<double>(cut[l]) / static_cast<double>(smaller);
    }
    return {sum, false};
}

}  // namespace

const char* objective_name(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::KMinCut: return "kmincut";
        case ObjectiveKind::NormalizedCut: return "ncut";
        case ObjectiveKind::BalancedCut: return "balanced";
        case ObjectiveKind::SparsestCut: return "sparsest";
    }
    return "?";
}

ObjectiveKind objective_from_name(const std::string& name) {
    if (name == "kmincut") return ObjectiveKind::KMinCut;
    if (name == "ncut") return ObjectiveKind::NormalizedCut;
    if (name == "balanced") return ObjectiveKind::BalancedCut;
    if (name == "sparsest") return ObjectiveKind::SparsestCut;
    throw ConfigError("unknown objective '" + name + "' (expected kmincut|ncut|balanced|sparsest)");
}

std::int64_t cut_size(const Graph& g, const Partitioning& p, int l) {
    std::int64_t c = 0;
    for (int v : p.members(l))
        for (int u : g.neighbors(v))
            if (p.part_of(u) != l) ++c;
    return c;
}

std::int64_t volume(const Graph& g, const Partitioning& p, int l) {
    std::int64_t vol = 0;
    for (int v : p.members(l)) vol += g.degree(v);
    return vol;
}

double k_mincut(const Graph& g, const Partitioning& p, CutDenominator denom) {
    require_edges(g);
    return kmincut_from(count(g, p).cut, denom_value(g, denom));
}

ObjectiveValue normalized_cut(const Graph& g, const Partitioning& p) {
    require_edges(g);
    auto c = count(g, p);
    return ncut_from(c.cut, c.vol);
}

ObjectiveValue balanced_cut(const Graph& g, const Partitioning& p) {
    require_edges(g);
    auto c = count(g, p);
    return balanced_from(c.cut, c.vol, c.size, g.num_nodes);
}

ObjectiveValue sparsest_cut(const Graph& g, const Partitioning& p) {
    require_edges(g);
    auto c = count(g, p);
    return sparsest_from(c.cut, c.size, g.num_nodes);
}

CutReport evaluate(const Graph& g, const Partitioning& p, ObjectiveKind kind, CutDenominator denom) {
    require_edges(g);
    auto c = count(g, p);
    ObjectiveValue val;
    switch (kind) {
        case ObjectiveKind::KMinCut: val = {kmincut_from(c.cut, denom_value(g, denom)), false}; break;
        case ObjectiveKind::NormalizedCut: val = ncut_from(c.cut, c.vol); break;
        case ObjectiveKind::BalancedCut: val = balanced_from(c.cut, c.vol, c.size, g.num_nodes); break;
        case ObjectiveKind::SparsestCut: val = sparsest_from(c.cut, c.size, g.num_nodes); break;
    }
    return CutReport{kind, val.value, val.degenerate, std::move(c.cut), std::move(c.vol), std::move(c.size)};
}

std::string CutReport::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "objective " << objective_name(objective) << "\n";
    os << "value " << value << "\n";
    os << "degenerate " << (degenerate ? 1 : 0) << "\n";
    auto emit = [&os](const char* key, const std::vector<std::int64_t>& xs) {
        os << key;
        for (auto x : xs) os << ' ' << x;
        os << "\n";
    };
    emit("per_partition_cut", per_partition_cut);
    emit("per_partition_volume", per_partition_volume);
    emit("per_partition_size", per_partition_size);
    return os.str();
}

ObjectiveTracker::ObjectiveTracker(const Graph& g, Partitioning& p, ObjectiveKind kind,
                                   CutDenominator denom)
    : g_(&g), p_(&p), kind_(kind), denom_(denom) {
    require_edges(g);
    auto c = count(g, p);
    counters_ = Counters{std::move(c.cut), std::move(c.vol), std::move(c.size)};
}

ObjectiveValue ObjectiveTracker::eval(const Counters& c) const {
    switch (kind_) {
        case ObjectiveKind::KMinCut: return {kmincut_from(c.cut, denom_value(*g_, denom_)), false};
        case ObjectiveKind::NormalizedCut: return ncut_from(c.cut, c.vol);
        case ObjectiveKind::BalancedCut: return balanced_from(c.cut, c.vol, c.size, g_->num_nodes);
        case ObjectiveKind::SparsestCut: return sparsest_from(c.cut, c.size, g_->num_nodes);
    }
    return {kNaN, true};
}

ObjectiveTracker::Counters ObjectiveTracker::after_move(int v, int to) const {
    Counters c = counters_;
    int from = p_->part_of(v);
    if (from == to) return c;
    int deg = g_->degree(v);
    std::int64_t to_from = 0, to_to = 0;  // neighbors of v in the source/target partitions
    for (int u : g_->neighbors(v)) {
        int pu = p_->part_of(u);
        if (pu == from) ++to_from;
        else if (pu == to) ++to_to;
    }
    // Edges v--(source) become crossing; edges v--(elsewhere) stop counting
    // against the source. Symmetrically for the target.
    c.cut[from] += to_from - (deg - to_from);
    c.cut[to] += (deg - to_to) - to_to;
    c.vol[from] -= deg;
    c.vol[to] += deg;
    --c.size[from];
    ++c.size[to];
    return c;
}

ObjectiveValue ObjectiveTracker::value() const { return eval(counters_); }

ObjectiveValue ObjectiveTracker::value_after(int v, int to) const { return eval(after_move(v, to)); }

double ObjectiveTracker::delta(int v, int to) const {
    ObjectiveValue before = value();
    ObjectiveValue after = value_after(v, to);
    if (before.degenerate || after.degenerate) return kNaN;
    return after.value - before.value;
}

void ObjectiveTracker::apply(int v, int to) {
    counters_ = after_move(v, to);
    p_->move(v, to);
}

CutReport ObjectiveTracker::report() const {
    ObjectiveValue val = value();
    return CutReport{kind_, val.value, val.degenerate, counters_.cut, counters_.vol, counters_.size};
}

double move_delta(const Graph& g, Partitioning& p, int v, int to, ObjectiveKind kind,
                  CutDenominator denom) {
    return ObjectiveTracker(g, p, kind, denom).delta(v, to);
}

}  // namespace rlcut
