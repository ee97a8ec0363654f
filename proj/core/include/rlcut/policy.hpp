#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rlcut/graph.hpp"
#include "rlcut/posenc.hpp"

namespace rlcut {

/// All trainable tensors of the policy: two message-passing layers followed
/// by a pairwise scoring MLP. Shapes depend only on (input_dim, hidden_dim),
/// never on the partition count or graph size; that is what makes the
/// policy reusable at unseen k.
struct PolicyParameters {
    int input_dim = 0;   // |F| + alpha
    int hidden_dim = 0;  // d

    Matrix w_self0, w_nbr0;  // d x input_dim
    Matrix w_self1, w_nbr1;  // d x d
    Matrix mlp_w1;           // d x 2d
    std::vector<double> mlp_b1;  // d
    std::vector<double> mlp_w2;  // d
    double mlp_b2 = 0.0;

    static PolicyParameters zeros(int input_dim, int hidden_dim);
    /// Seeded uniform Glorot-style fan-based initialization.
    static PolicyParameters glorot(int input_dim, int hidden_dim, std::uint64_t seed);

    /// Visits every parameter scalar in a fixed order; used by the optimizer
    /// and by gradient checks.
    void for_each(const std::function<void(double&)>& f);
    void for_each(const std::function<void(double)>& f) const;
    std::size_t scalar_count() const;

    void add_scaled(const PolicyParameters& other, double scale);
};

/// Softmax distribution over the partitions adjacent to the selected node.
/// A partition is a candidate iff it contains at least one neighbor.
struct ActionDistribution {
    std::vector<int> candidates;
    std::vector<double> scores;         // unnormalized, parallel to candidates
    std::vector<double> probabilities;  // sums to 1
};

/// Two rounds of mean-aggregation message passing over the initial
/// embeddings; ReLU between the layers, linear output.
Matrix gnn_forward(const Graph& g, const InitialEmbeddings& emb, const PolicyParameters& params);

/// Mean over neighbors of v inside partition q of MLP(relu(h_v || h_u)).
/// Throws ConfigError when q holds no neighbor of v (not a candidate).
double part_score(const Graph& g, const Matrix& h, const Partitioning& p, int v, int q,
                  const PolicyParameters& params);

/// Throws ConfigError for degree-0 nodes (no candidates).
ActionDistribution partition_distribution(const Graph& g, const Matrix& h, const Partitioning& p,
                                          int v, const PolicyParameters& params);

int sample_action(const ActionDistribution& dist, std::mt19937_64& rng);
int argmax_action(const ActionDistribution& dist);

/// Exact gradient of log pi(chosen | state) with respect to every policy
/// tensor, by reverse-mode differentiation through the message passing,
/// the scoring MLP, and the softmax.
PolicyParameters log_prob_grad(const Graph& g, const InitialEmbeddings& emb, const Partitioning& p,
                               int v, int chosen, const PolicyParameters& params);

/// Versioned JSON checkpoint. `feature_dim`/`alpha` record the embedding
/// split so a mismatched graph is rejected with a clear message. The file
/// carries no partition count: checkpoints are k-independent.
struct CheckpointMeta {
    int feature_dim = 0;
    int alpha = 0;
};
void save_checkpoint(const std::string& path, const PolicyParameters& params,
                     const CheckpointMeta& meta);
std::pair<PolicyParameters, CheckpointMeta> load_checkpoint(const std::string& path);

}  // namespace rlcut
