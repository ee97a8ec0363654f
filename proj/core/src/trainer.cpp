#include "rlcut/trainer.hpp"

#include <cmath>
#include <limits>

#include "rlcut/errors.hpp"
#include "rlcut/selection.hpp"

namespace rlcut {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Sweep-based node picker shared by train and infer. Every node is chosen
/// at most once per sweep; the visited set resets when exhausted.
class NodePicker {
public:
    NodePicker(const Graph& g, bool random, std::uint64_t seed)
        : g_(&g), random_(random), rng_(seed), visited_(g.num_nodes, false) {}

    /// Picks the next node with at least one neighbor, recomputing scores
    /// against the current partitioning. Returns -1 only on an edgeless
    /// graph. Sets *sweep_completed when the visited set wrapped around.
    int pick(const Partitioning& p, bool* sweep_completed) {
        *sweep_completed = false;
        for (;;) {
            auto v = next(p);
            if (!v) {
                std::fill(visited_.begin(), visited_.end(), false);
                *sweep_completed = true;
                v = next(p);
                if (!v) return -1;
            }
            visited_[*v] = true;
            if (g_->degree(*v) > 0) return *v;
            // degree-0 nodes have no candidate partition; burn and continue
        }
    }

private:
    std::optional<int> next(const Partitioning& p) {
        if (random_) return random_select_node(*g_, visited_, rng_);
        return select_node(node_scores(*g_, p), visited_);
    }

    const Graph* g_;
    bool random_;
    std::mt19937_64 rng_;
    std::vector<bool> visited_;
};

}  // namespace

void Adam::step(PolicyParameters& params, const PolicyParameters& grad) {
    std::vector<double> flat;
    grad.for_each([&flat](double x) { flat.push_back(x); });
    if (m.empty()) {
        m.assign(flat.size(), 0.0);
        v.assign(flat.size(), 0.0);
    }
    ++t;
    double bc1 = 1.0 - std::pow(beta1, static_cast<double>(t));
    double bc2 = 1.0 - std::pow(beta2, static_cast<double>(t));
    std::size_t i = 0;
    params.for_each([&](double& x) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * flat[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * flat[i] * flat[i];
        x += lr * (m[i] / bc1) / (std::sqrt(v[i] / bc2) + eps);
        ++i;
    });
}

void apply_move(Partitioning& p, int v, int to) { p.move(v, to); }

double reward(const ObjectiveValue& prev, const ObjectiveValue& next, double lambda) {
    if (next.degenerate) return -lambda;
    if (prev.degenerate) return 0.0;  // unreachable in training (start is validated)
    double sum = prev.value + next.value;
    if (sum == 0.0) return 0.0;
    return lambda * (prev.value - next.value) / sum;
}

std::vector<double> discounted_returns(const std::vector<double>& rewards, double gamma) {
    std::vector<double> d(rewards.size(), 0.0);
    double acc = 0.0;
    for (int t = static_cast<int>(rewards.size()) - 1; t >= 0; --t) {
        acc = rewards[t] + gamma * acc;
        d[t] = acc;
    }
    return d;
}

TrainResult train(const Graph& g, const InitialEmbeddings& emb, const Partitioning& warm,
                  const TrainConfig& cfg) {
    if (cfg.gamma <= 0.0 || cfg.gamma > 1.0) throw ConfigError("gamma must be in (0,1]");
    if (cfg.horizon < 1) throw ConfigError("trajectory length must be >= 1");
    if (cfg.lr <= 0.0) throw ConfigError("learning rate must be > 0");

    Partitioning p = warm;
    ObjectiveTracker tracker(g, p, cfg.objective, cfg.denom);
    ObjectiveValue start = tracker.value();
    if (start.degenerate)
        throw ConfigError("warm-start partitioning is degenerate for this objective; re-run warm start");

    PolicyParameters params =
        PolicyParameters::glorot(emb.matrix.cols, cfg.hidden_dim, cfg.seed ^ 0x9e3779b97f4a7c15ull);
    Adam adam;
    adam.lr = cfg.lr;
    std::mt19937_64 action_rng(cfg.seed ^ 0xc2b2ae3d27d4eb4full);
    NodePicker picker(g, cfg.random_selection, cfg.seed ^ 0x165667b19e3779f9ull);

    TrainResult result{params, {}, p, p, start.value};

    for (int update = 0; update < cfg.updates; ++update) {
        std::vector<double> rewards;
        std::vector<PolicyParameters> grads;
        for (int t = 0; t < cfg.horizon; ++t) {
            bool wrapped = false;
            int v = picker.pick(p, &wrapped);
            if (v < 0) break;
            Matrix h = gnn_forward(g, emb, params);
            ActionDistribution dist = partition_distribution(g, h, p, v, params);
            int action = sample_action(dist, action_rng);
            grads.push_back(log_prob_grad(g, emb, p, v, action, params));
            ObjectiveValue prev = tracker.value();
            ObjectiveValue next = tracker.value_after(v, action);
            rewards.push_back(reward(prev, next, cfg.lambda));
            tracker.apply(v, action);  // the move stands even if degenerate
            if (!next.degenerate && next.value < result.best_value) {
                result.best_value = next.value;
                result.best_partitioning = p;
            }
        }

        std::vector<double> returns = discounted_returns(rewards, cfg.gamma);
        PolicyParameters grad_j = PolicyParameters::zeros(params.input_dim, params.hidden_dim);
        for (std::size_t t = 0; t < grads.size(); ++t) grad_j.add_scaled(grads[t], returns[t]);
        adam.step(params, grad_j);

        double reward_mean = 0;
        for (double r : rewards) reward_mean += r;
        if (!rewards.empty()) reward_mean /= static_cast<double>(rewards.size());
        ObjectiveValue cur = tracker.value();
        result.log.push_back({update, cur.degenerate ? kNaN : cur.value, result.best_value, reward_mean});
    }

    result.params = std::move(params);
    result.final_partitioning = p;
    return result;
}

InferResult infer(const Graph& g, const InitialEmbeddings& emb, const PolicyParameters& params,
                  const InferConfig& icfg, const Partitioning& warm, ObjectiveKind kind,
                  CutDenominator denom) {
    Partitioning p = warm;
    ObjectiveTracker tracker(g, p, kind, denom);

    Matrix h = gnn_forward(g, emb, params);  // computed exactly once
    NodePicker picker(g, icfg.random_selection, icfg.seed ^ 0x165667b19e3779f9ull);

    InferResult result{p, tracker.report(), 0};
    double best = tracker.value().degenerate ? std::numeric_limits<double>::infinity()
                                             : tracker.value().value;
    std::int64_t budget = icfg.budget >= 0 ? icfg.budget : 2ll * g.num_nodes;
    int stale_sweeps = 0;
    bool sweep_moved = false;
    bool sweep_improved = false;

    for (std::int64_t step = 0; step < budget; ++step) {
        bool wrapped = false;
        int v = picker.pick(p, &wrapped);
        if (v < 0) break;
        if (wrapped && step > 0) {
            if (!sweep_moved) break;  // fixpoint: a full sweep changed nothing
            if (!sweep_improved && ++stale_sweeps >= icfg.patience) break;
            if (sweep_improved) stale_sweeps = 0;
            sweep_moved = false;
            sweep_improved = false;
        }
        ActionDistribution dist = partition_distribution(g, h, p, v, params);
        int action = argmax_action(dist);
        ++result.steps;
        if (action == p.part_of(v)) continue;
        ObjectiveValue next = tracker.value_after(v, action);
        if (next.degenerate) continue;  // roll back (never applied) at inference
        tracker.apply(v, action);
        sweep_moved = true;
        if (next.value < best) {
            best = next.value;
            result.best = p;
            sweep_improved = true;
        }
    }

    Partitioning best_copy = result.best;
    ObjectiveTracker best_tracker(g, best_copy, kind, denom);
    result.report = best_tracker.report();
    return result;
}

}  // namespace rlcut
