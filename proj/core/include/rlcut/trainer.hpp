#pragma once

#include <cstdint>
#include <vector>

#include "rlcut/graph.hpp"
#include "rlcut/objectives.hpp"
#include "rlcut/policy.hpp"
#include "rlcut/posenc.hpp"

namespace rlcut {

struct TrainConfig {
    ObjectiveKind objective = ObjectiveKind::NormalizedCut;
    int k = 2;
    double gamma = 0.99;
    int horizon = 2;        // trajectory length T
    double lambda = 100.0;  // reward scale
    double lr = 1e-4;
    int updates = 2000;
    int hidden_dim = 32;
    std::uint64_t seed = 0;
    bool random_selection = false;
    CutDenominator denom = CutDenominator::EdgeCount;
};

struct InferConfig {
    std::int64_t budget = -1;  // selection steps; -1 means 2|V|
    int patience = 1;          // sweeps without best improvement before stop
    bool random_selection = false;
    std::uint64_t seed = 0;
};

/// Adam optimizer state over the flat parameter vector; ascent direction
/// (the REINFORCE objective is maximized).
struct Adam {
    double lr = 1e-4;
    double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
    std::vector<double> m, v;
    std::int64_t t = 0;

    void step(PolicyParameters& params, const PolicyParameters& grad);
};

void apply_move(Partitioning& p, int v, int to);

/// Scaled relative improvement lambda*(prev-next)/(prev+next); zero when
/// both are zero; -lambda when the successor state is degenerate.
double reward(const ObjectiveValue& prev, const ObjectiveValue& next, double lambda);

/// D[t] = sum_{j>=0, t+j < T} gamma^j * rewards[t+j].
std::vector<double> discounted_returns(const std::vector<double>& rewards, double gamma);

struct TrainLogEntry {
    int update;
    double objective;  // NaN when the current state is degenerate
    double best;
    double reward_mean;
};

struct TrainResult {
    PolicyParameters params;
    std::vector<TrainLogEntry> log;
    Partitioning final_partitioning;
    Partitioning best_partitioning;
    double best_value;
};

/// REINFORCE over the move MDP. Each update rolls a trajectory of `horizon`
/// steps (node selection sweep, embedding recompute, sampled partition
/// move, objective-delta reward), then takes one Adam ascent step on
/// sum_t D[t] * grad log pi. Moves persist across updates.
TrainResult train(const Graph& g, const InitialEmbeddings& emb, const Partitioning& warm,
                  const TrainConfig& cfg);

struct InferResult {
    Partitioning best;
    CutReport report;
    std::int64_t steps = 0;
};

/// Greedy decode: embeddings computed once, argmax moves, best-seen
/// partitioning tracked and returned. Moves that would make the state
/// degenerate are rolled back. `k` may differ from the training k.
InferResult infer(const Graph& g, const InitialEmbeddings& emb, const PolicyParameters& params,
                  const InferConfig& icfg, const Partitioning& warm, ObjectiveKind kind,
                  CutDenominator denom = CutDenominator::EdgeCount);

}  // namespace rlcut
