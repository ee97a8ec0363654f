#include "rlcut/policy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "rlcut/errors.hpp"

namespace rlcut {

namespace {

constexpr int kCheckpointVersion = 1;

/// out[u] = (1/|N_u|) * sum over neighbors of in[u'], zero row for isolated nodes.
Matrix neighbor_mean(const Graph& g, const Matrix& in) {
    Matrix out(in.rows, in.cols);
    for (int u = 0; u < g.num_nodes; ++u) {
        if (g.degree(u) == 0) continue;
        double inv = 1.0 / g.degree(u);
        for (int w : g.neighbors(u))
            for (int c = 0; c < in.cols; ++c) out.at(u, c) += inv * in.at(w, c);
    }
    return out;
}

/// Adjoint of neighbor_mean: out[w] += sum over u in N(w) of in[u]/|N_u|.
Matrix neighbor_mean_adjoint(const Graph& g, const Matrix& in) {
    Matrix out(in.rows, in.cols);
    for (int u = 0; u < g.num_nodes; ++u) {
        if (g.degree(u) == 0) continue;
        double inv = 1.0 / g.degree(u);
        for (int w : g.neighbors(u))
            for (int c = 0; c < in.cols; ++c) out.at(w, c) += inv * in.at(u, c);
    }
    return out;
}

/// y = x * Wt  (x: n x in, W: out x in, y: n x out)
Matrix apply_weight(const Matrix& x, const Matrix& w) {
    Matrix y(x.rows, w.rows);
    for (int r = 0; r < x.rows; ++r)
        for (int o = 0; o < w.rows; ++o) {
            double s = 0;
            const double* xr = x.row(r);
            const double* wr = w.row(o);
            for (int i = 0; i < w.cols; ++i) s += xr[i] * wr[i];
            y.at(r, o) = s;
        }
    return y;
}

/// dW += dY^T * X for Y = X * W^T.
void accumulate_weight_grad(Matrix& dw, const Matrix& dy, const Matrix& x) {
    for (int r = 0; r < x.rows; ++r)
        for (int o = 0; o < dw.rows; ++o) {
            double dyro = dy.at(r, o);
            if (dyro == 0.0) continue;
            double* dwr = dw.row(o);
            const double* xr = x.row(r);
            for (int i = 0; i < dw.cols; ++i) dwr[i] += dyro * xr[i];
        }
}

/// dX = dY * W for Y = X * W^T.
Matrix weight_adjoint(const Matrix& dy, const Matrix& w) {
    Matrix dx(dy.rows, w.cols);
    for (int r = 0; r < dy.rows; ++r)
        for (int o = 0; o < w.rows; ++o) {
            double dyro = dy.at(r, o);
            if (dyro == 0.0) continue;
            const double* wr = w.row(o);
            double* dxr = dx.row(r);
            for (int i = 0; i < w.cols; ++i) dxr[i] += dyro * wr[i];
        }
    return dx;
}

struct Forward {
    Matrix z1;   // pre-activation of layer 0
    Matrix h1;   // relu(z1)
    Matrix m0;   // neighbor mean of h0
    Matrix m1;   // neighbor mean of h1
    Matrix h;    // final embeddings (linear layer-1 output)
};

Forward forward_pass(const Graph& g, const InitialEmbeddings& emb, const PolicyParameters& p) {
    if (emb.matrix.cols != p.input_dim)
        throw DimensionError("embedding dim " + std::to_string(emb.matrix.cols) +
                             " != policy input dim " + std::to_string(p.input_dim));
    Forward f;
    f.m0 = neighbor_mean(g, emb.matrix);
    f.z1 = apply_weight(emb.matrix, p.w_self0);
    Matrix zn = apply_weight(f.m0, p.w_nbr0);
    for (std::size_t i = 0; i < f.z1.data.size(); ++i) f.z1.data[i] += zn.data[i];
    f.h1 = f.z1;
    for (double& x : f.h1.data) x = std::max(0.0, x);
    f.m1 = neighbor_mean(g, f.h1);
    f.h = apply_weight(f.h1, p.w_self1);
    Matrix hn = apply_weight(f.m1, p.w_nbr1);
    for (std::size_t i = 0; i < f.h.data.size(); ++i) f.h.data[i] += hn.data[i];
    return f;
}

struct PairScore {
    double score;
    std::vector<double> x;   // relu(h_v || h_u), 2d
    std::vector<double> a1;  // relu of hidden pre-activation, d
};

PairScore mlp_pair(const Matrix& h, int v, int u, const PolicyParameters& p) {
    int d = p.hidden_dim;
    PairScore out;
    out.x.resize(2 * d);
    for (int i = 0; i < d; ++i) {
        out.x[i] = std::max(0.0, h.at(v, i));
        out.x[d + i] = std::max(0.0, h.at(u, i));
    }
    out.a1.resize(d);
    double s = p.mlp_b2;
    for (int o = 0; o < d; ++o) {
        double z = p.mlp_b1[o];
        const double* wr = p.mlp_w1.row(o);
        for (int i = 0; i < 2 * d; ++i) z += wr[i] * out.x[i];
        out.a1[o] = std::max(0.0, z);
        s += p.mlp_w2[o] * out.a1[o];
    }
    out.score = s;
    return out;
}

std::vector<double> softmax(const std::vector<double>& scores) {
    double m = *std::max_element(scores.begin(), scores.end());
    std::vector<double> p(scores.size());
    double z = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        p[i] = std::exp(scores[i] - m);
        z += p[i];
    }
    for (double& x : p) x /= z;
    return p;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows; ++r)
        rows.push_back(std::vector<double>(m.row(r), m.row(r) + m.cols));
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError(std::string("checkpoint tensor ") + name + " has wrong row count");
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols)
            throw ParseError(std::string("checkpoint tensor ") + name + " has wrong column count");
        for (int c = 0; c < cols; ++c) m.at(r, c) = j[r][c].get<double>();
    }
    return m;
}

}  // namespace

PolicyParameters PolicyParameters::zeros(int input_dim, int hidden_dim) {
    PolicyParameters p;
    p.input_dim = input_dim;
    p.hidden_dim = hidden_dim;
    p.w_self0 = Matrix(hidden_dim, input_dim);
    p.w_nbr0 = Matrix(hidden_dim, input_dim);
    p.w_self1 = Matrix(hidden_dim, hidden_dim);
    p.w_nbr1 = Matrix(hidden_dim, hidden_dim);
    p.mlp_w1 = Matrix(hidden_dim, 2 * hidden_dim);
    p.mlp_b1.assign(hidden_dim, 0.0);
    p.mlp_w2.assign(hidden_dim, 0.0);
    p.mlp_b2 = 0.0;
    return p;
}

PolicyParameters PolicyParameters::glorot(int input_dim, int hidden_dim, std::uint64_t seed) {
    PolicyParameters p = zeros(input_dim, hidden_dim);
    std::mt19937_64 rng(seed);
    auto init = [&rng](Matrix& m) {
        double bound = std::sqrt(6.0 / (m.rows + m.cols));
        std::uniform_real_distribution<double> u(-bound, bound);
        for (double& x : m.data) x = u(rng);
    };
    init(p.w_self0);
    init(p.w_nbr0);
    init(p.w_self1);
    init(p.w_nbr1);
    init(p.mlp_w1);
    {
        double bound = std::sqrt(6.0 / (hidden_dim + 1));
        std::uniform_real_distribution<double> u(-bound, bound);
        for (double& x : p.mlp_w2) x = u(rng);
    }
    // biases start at zero
    return p;
}

void PolicyParameters::for_each(const std::function<void(double&)>& f) {
    for (Matrix* m : {&w_self0, &w_nbr0, &w_self1, &w_nbr1, &mlp_w1})
        for (double& x : m->data) f(x);
    for (double& x : mlp_b1) f(x);
    for (double& x : mlp_w2) f(x);
    f(mlp_b2);
}

void PolicyParameters::for_each(const std::function<void(double)>& f) const {
    const_cast<PolicyParameters*>(this)->for_each([&f](double& x) { f(x); });
}

std::size_t PolicyParameters::scalar_count() const {
    std::size_t n = 0;
    for_each([&n](double) { ++n; });
    return n;
}

void PolicyParameters::add_scaled(const PolicyParameters& other, double scale) {
    std::size_t i = 0;
    std::vector<double> flat;
    flat.reserve(other.scalar_count());
    other.for_each([&flat](double x) { flat.push_back(x); });
    for_each([&](double& x) { x += scale * flat[i++]; });
}

Matrix gnn_forward(const Graph& g, const InitialEmbeddings& emb, const PolicyParameters& params) {
    return forward_pass(g, emb, params).h;
}

double part_score(const Graph& g, const Matrix& h, const Partitioning& p, int v, int q,
                  const PolicyParameters& params) {
    double sum = 0;
    int count = 0;
    for (int u : g.neighbors(v)) {
        if (p.part_of(u) != q) continue;
        sum += mlp_pair(h, v, u, params).score;
        ++count;
    }
    if (count == 0)
        throw ConfigError("partition " + std::to_string(q) + " holds no neighbor of node " +
                          std::to_string(v));
    return sum / count;
}

ActionDistribution partition_distribution(const Graph& g, const Matrix& h, const Partitioning& p,
                                          int v, const PolicyParameters& params) {
    if (g.degree(v) == 0)
        throw ConfigError("node " + std::to_string(v) + " has no neighbors and no candidate partitions");
    std::vector<int> counts(p.k(), 0);
    for (int u : g.neighbors(v)) ++counts[p.part_of(u)];
    ActionDistribution dist;
    for (int q = 0; q < p.k(); ++q)
        if (counts[q] > 0) {
            dist.candidates.push_back(q);
            dist.scores.push_back(part_score(g, h, p, v, q, params));
        }
    dist.probabilities = softmax(dist.scores);
    return dist;
}

int sample_action(const ActionDistribution& dist, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double u = u01(rng);
    double acc = 0;
    for (std::size_t i = 0; i < dist.candidates.size(); ++i) {
        acc += dist.probabilities[i];
        if (u < acc) return dist.candidates[i];
    }
    return dist.candidates.back();
}

int argmax_action(const ActionDistribution& dist) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < dist.candidates.size(); ++i)
        if (dist.probabilities[i] > dist.probabilities[best]) best = i;
    return dist.candidates[best];
}

PolicyParameters log_prob_grad(const Graph& g, const InitialEmbeddings& emb, const Partitioning& p,
                               int v, int chosen, const PolicyParameters& params) {
    PolicyParameters grad = PolicyParameters::zeros(params.input_dim, params.hidden_dim);
    int d = params.hidden_dim;

    Forward f = forward_pass(g, emb, params);

    std::vector<int> counts(p.k(), 0);
    for (int u : g.neighbors(v)) ++counts[p.part_of(u)];
    std::vector<int> candidates;
    for (int q = 0; q < p.k(); ++q)
        if (counts[q] > 0) candidates.push_back(q);
    auto it = std::find(candidates.begin(), candidates.end(), chosen);
    if (it == candidates.end())
        throw ConfigError("chosen partition " + std::to_string(chosen) + " is not a candidate");
    if (candidates.size() == 1) return grad;  // log pi == 0 identically

    std::vector<double> scores;
    for (int q : candidates) scores.push_back(part_score(g, f.h, p, v, q, params));
    std::vector<double> probs = softmax(scores);

    // d log pi(chosen) / d score_q = [q == chosen] - prob_q
    Matrix dh(f.h.rows, d);
    for (std::size_t qi = 0; qi < candidates.size(); ++qi) {
        int q = candidates[qi];
        double gq = (q == chosen ? 1.0 : 0.0) - probs[qi];
        double w = gq / counts[q];  // mean aggregation
        for (int u : g.neighbors(v)) {
            if (p.part_of(u) != q) continue;
            PairScore ps = mlp_pair(f.h, v, u, params);
            // back through the scoring MLP
            std::vector<double> dx(2 * d, 0.0);
            for (int o = 0; o < d; ++o) {
                grad.mlp_w2[o] += w * ps.a1[o];
                if (ps.a1[o] <= 0.0) continue;
                double dz = w * params.mlp_w2[o];
                grad.mlp_b1[o] += dz;
                const double* wr = params.mlp_w1.row(o);
                double* gwr = grad.mlp_w1.row(o);
                for (int i = 0; i < 2 * d; ++i) {
                    gwr[i] += dz * ps.x[i];
                    dx[i] += dz * wr[i];
                }
            }
            grad.mlp_b2 += w;
            // back through relu on the concatenation, into final embeddings
            for (int i = 0; i < d; ++i) {
                if (f.h.at(v, i) > 0.0) dh.at(v, i) += dx[i];
                if (f.h.at(u, i) > 0.0) dh.at(u, i) += dx[d + i];
            }
        }
    }

    // layer 1 (linear output): h = h1 * Wself1^T + m1 * Wnbr1^T
    accumulate_weight_grad(grad.w_self1, dh, f.h1);
    accumulate_weight_grad(grad.w_nbr1, dh, f.m1);
    Matrix dh1 = weight_adjoint(dh, params.w_self1);
    Matrix dm1 = weight_adjoint(dh, params.w_nbr1);
    Matrix dm1_back = neighbor_mean_adjoint(g, dm1);
    for (std::size_t i = 0; i < dh1.data.size(); ++i) dh1.data[i] += dm1_back.data[i];

    // relu between the layers
    for (std::size_t i = 0; i < dh1.data.size(); ++i)
        if (f.z1.data[i] <= 0.0) dh1.data[i] = 0.0;

    // layer 0: z1 = h0 * Wself0^T + m0 * Wnbr0^T
    accumulate_weight_grad(grad.w_self0, dh1, emb.matrix);
    accumulate_weight_grad(grad.w_nbr0, dh1, f.m0);
    return grad;
}

void save_checkpoint(const std::string& path, const PolicyParameters& params,
                     const CheckpointMeta& meta) {
    nlohmann::json j;
    j["format"] = "rlcut-policy";
    j["version"] = kCheckpointVersion;
    j["input_dim"] = params.input_dim;
    j["hidden_dim"] = params.hidden_dim;
    j["layers"] = 2;
    j["feature_dim"] = meta.feature_dim;
    j["alpha"] = meta.alpha;
    j["w_self0"] = matrix_to_json(params.w_self0);
    j["w_nbr0"] = matrix_to_json(params.w_nbr0);
    j["w_self1"] = matrix_to_json(params.w_self1);
    j["w_nbr1"] = matrix_to_json(params.w_nbr1);
    j["mlp_w1"] = matrix_to_json(params.mlp_w1);
    j["mlp_b1"] = params.mlp_b1;
    j["mlp_w2"] = params.mlp_w2;
    j["mlp_b2"] = params.mlp_b2;
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write checkpoint: " + path);
    out << j.dump(1) << "\n";
}

std::pair<PolicyParameters, CheckpointMeta> load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open checkpoint: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed checkpoint " + path + ": " + e.what());
    }
    if (j.value("format", "") != "rlcut-policy")
        throw ParseError(path + " is not a policy checkpoint");
    if (j.value("version", -1) != kCheckpointVersion)
        throw ParseError("unsupported checkpoint version in " + path);
    int in_dim = j.at("input_dim").get<int>();
    int d = j.at("hidden_dim").get<int>();
    PolicyParameters p = PolicyParameters::zeros(in_dim, d);
    p.w_self0 = matrix_from_json(j.at("w_self0"), d, in_dim, "w_self0");
    p.w_nbr0 = matrix_from_json(j.at("w_nbr0"), d, in_dim, "w_nbr0");
    p.w_self1 = matrix_from_json(j.at("w_self1"), d, d, "w_self1");
    p.w_nbr1 = matrix_from_json(j.at("w_nbr1"), d, d, "w_nbr1");
    p.mlp_w1 = matrix_from_json(j.at("mlp_w1"), d, 2 * d, "mlp_w1");
    p.mlp_b1 = j.at("mlp_b1").get<std::vector<double>>();
    p.mlp_w2 = j.at("mlp_w2").get<std::vector<double>>();
    p.mlp_b2 = j.at("mlp_b2").get<double>();
    if (static_cast<int>(p.mlp_b1.size()) != d || static_cast<int>(p.mlp_w2.size()) != d)
        throw ParseError("checkpoint MLP vectors have wrong length in " + path);
    CheckpointMeta meta;
    meta.feature_dim = j.value("feature_dim", 0);
    meta.alpha = j.value("alpha", 0);
    if (meta.feature_dim + meta.alpha != in_dim)
        throw ParseError("checkpoint dimension metadata inconsistent in " + path);
    return {std::move(p), meta};
}

}  // namespace rlcut
