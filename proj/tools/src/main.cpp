// rlcut: reinforcement-learned graph partitioning over four cut objectives.
//
// One binary, subcommand style. Exit codes: 0 success, 2 usage, 3
// input/parse error, 4 dimension/config error, 5 size guard.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rlcut/baseline.hpp"
#include "rlcut/errors.hpp"
#include "rlcut/io.hpp"
#include "rlcut/kmeans.hpp"
#include "rlcut/objectives.hpp"
#include "rlcut/policy.hpp"
#include "rlcut/posenc.hpp"
#include "rlcut/synth.hpp"
#include "rlcut/trainer.hpp"

namespace {

using nlohmann::json;

struct PipelineFlags {
    std::string graph_path;
    std::string features_path;
    int alpha = 35;
    int beta = 100;
    double c = 0.85;
    std::uint64_t seed = 0;
};

struct Pipeline {
    rlcut::LoadedGraph loaded;
    std::optional<rlcut::FeatureMatrix> features;
    rlcut::PositionalEmbedding pos;
    rlcut::InitialEmbeddings emb;
};

void add_pipeline_flags(CLI::App* cmd, PipelineFlags& f, bool with_posenc = true) {
    cmd->add_option("--graph", f.graph_path, "edge-list file")->required();
    cmd->add_option("--features", f.features_path, "node feature file (optional)");
    if (with_posenc) {
        cmd->add_option("--alpha", f.alpha, "anchor count");
        cmd->add_option("--beta", f.beta, "restart-walk iterations");
        cmd->add_option("--c", f.c, "continuation probability");
    }
    cmd->add_option("--seed", f.seed, "random seed");
}

rlcut::LoadedGraph load_component(const PipelineFlags& f) {
    return rlcut::largest_connected_component(rlcut::load_edge_list(f.graph_path));
}

Pipeline run_pipeline(const PipelineFlags& f) {
    Pipeline p;
    auto raw = rlcut::load_edge_list(f.graph_path);
    auto kept = rlcut::largest_component_nodes(raw.graph);
    std::optional<rlcut::FeatureMatrix> feats;
    if (!f.features_path.empty()) feats = rlcut::load_features(f.features_path, raw);
    p.loaded.graph = rlcut::induced_subgraph(raw.graph, kept);
    for (int v : kept) p.loaded.original_ids.push_back(raw.original_ids[v]);
    p.loaded.self_loops_dropped = raw.self_loops_dropped;
    if (feats) p.features = rlcut::filter_rows(*feats, kept);

    rlcut::PosConfig pc;
    pc.alpha = f.alpha;
    pc.beta = f.beta;
    pc.c = f.c;
    pc.seed = f.seed;
    p.pos = rlcut::lipschitz_embed(p.loaded.graph, pc);
    p.emb = rlcut::initial_embeddings(p.loaded.graph, p.features ? &*p.features : nullptr, p.pos);
    return p;
}

json pipeline_manifest(const std::string& command, const PipelineFlags& f) {
    json m;
    m["command"] = command;
    m["graph"] = f.graph_path;
    m["graph_digest"] = rlcut::file_digest(f.graph_path);
    if (!f.features_path.empty()) {
        m["features"] = f.features_path;
        m["features_digest"] = rlcut::file_digest(f.features_path);
    }
    m["alpha"] = f.alpha;
    m["beta"] = f.beta;
    m["c"] = f.c;
    m["seed"] = f.seed;
    return m;
}

void write_manifest(const std::string& path, const json& m) {
    std::ofstream out(path);
    if (!out) throw rlcut::ParseError("cannot write manifest: " + path);
    out << m.dump(1) << "\n";
}

void print_report(std::ostream& os, const rlcut::CutReport& rep) { os << rep.to_text(); }

int dispatch(CLI::App& app, int argc, char** argv) {
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reinforcement-learned graph partitioning"};
    app.require_subcommand(1);

    // ---- gen-sbm ----
    rlcut::SbmSpec sbm_spec;
    std::string sbm_prefix = "sbm";
    auto* gen = app.add_subcommand("gen-sbm", "generate a planted-partition graph");
    gen->add_option("--blocks", sbm_spec.blocks, "number of planted blocks");
    gen->add_option("--block-size", sbm_spec.block_size, "nodes per block");
    gen->add_option("--p-in", sbm_spec.p_in, "intra-block edge probability")->required();
    gen->add_option("--p-out", sbm_spec.p_out, "inter-block edge probability");
    gen->add_option("--seed", sbm_spec.seed, "random seed");
    gen->add_option("--out-prefix", sbm_prefix, "output file prefix");

    // ---- train ----
    PipelineFlags train_pf;
    rlcut::TrainConfig train_cfg;
    std::string train_objective = "ncut";
    std::string train_init = "kmeans";
    std::string train_select = "heuristic";
    std::string train_out = "policy.json";
    auto* train = app.add_subcommand("train", "train a partitioning policy on one graph");
    add_pipeline_flags(train, train_pf);
    train->add_option("--objective", train_objective, "kmincut|ncut|balanced|sparsest");
    train->add_option("--k", train_cfg.k, "partition count")->required();
    train->add_option("--gamma", train_cfg.gamma, "discount factor");
    train->add_option("--T", train_cfg.horizon, "trajectory length");
    train->add_option("--lambda", train_cfg.lambda, "reward scale");
    train->add_option("--lr", train_cfg.lr, "learning rate");
    train->add_option("--updates", train_cfg.updates, "number of policy updates");
    train->add_option("--hidden", train_cfg.hidden_dim, "GNN hidden width");
    train->add_option("--init", train_init, "kmeans|random warm start");
    train->add_option("--node-select", train_select, "heuristic|random node selection");
    train->add_option("--out", train_out, "checkpoint path (log goes to <out>.log)");

    // ---- partition ----
    PipelineFlags part_pf;
    std::string part_ckpt, part_out = "partition.txt";
    std::string part_objective = "ncut";
    std::string part_select = "heuristic";
    int part_k = 0;
    rlcut::InferConfig infer_cfg;
    auto* part = app.add_subcommand("partition", "run inference with a trained checkpoint");
    add_pipeline_flags(part, part_pf);
    part->add_option("--checkpoint", part_ckpt, "policy checkpoint")->required();
    part->add_option("--k", part_k, "partition count (may differ from training)")->required();
    part->add_option("--objective", part_objective, "objective tracked during inference");
    part->add_option("--budget", infer_cfg.budget, "max selection steps (-1 = 2|V|)");
    part->add_option("--patience", infer_cfg.patience, "stale sweeps before stop");
    part->add_option("--node-select", part_select, "heuristic|random node selection");
    part->add_option("--out", part_out, "partition output file");

    // ---- eval ----
    PipelineFlags eval_pf;
    std::string eval_partition, eval_objective = "all", eval_method = "file";
    int eval_k = 0;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a partition file or the k-means baseline");
    add_pipeline_flags(eval_cmd, eval_pf);
    eval_cmd->add_option("--partition-file", eval_partition, "partition file to evaluate");
    eval_cmd->add_option("--objective", eval_objective, "all|kmincut|ncut|balanced|sparsest");
    eval_cmd->add_option("--method", eval_method, "file|kmeans");
    eval_cmd->add_option("--k", eval_k, "partition count for --method kmeans");

    // ---- oracle ----
    PipelineFlags oracle_pf;
    std::string oracle_objective = "ncut";
    int oracle_k = 2;
    auto* oracle = app.add_subcommand("oracle", "brute-force optimum for tiny graphs (|V| <= 12)");
    oracle->add_option("--graph", oracle_pf.graph_path, "edge-list file")->required();
    oracle->add_option("--k", oracle_k, "partition count");
    oracle->add_option("--objective", oracle_objective, "kmincut|ncut|balanced|sparsest");

    // ---- warmstart ----
    PipelineFlags warm_pf;
    int warm_k = 2;
    std::string warm_out = "warmstart.txt";
    std::string warm_init = "kmeans";
    auto* warm = app.add_subcommand("warmstart", "emit the initial partitioning and its reports");
    add_pipeline_flags(warm, warm_pf);
    warm->add_option("--k", warm_k, "partition count")->required();
    warm->add_option("--init", warm_init, "kmeans|random");
    warm->add_option("--out", warm_out, "partition output file");

    // ---- embed ----
    PipelineFlags embed_pf;
    std::string embed_out = "embeddings.txt";
    auto* embed = app.add_subcommand("embed", "export initial node embeddings");
    add_pipeline_flags(embed, embed_pf);
    embed->add_option("--out", embed_out, "matrix output file");

    if (int rc = dispatch(app, argc, argv)) return rc;

    try {
        if (*gen) {
            auto sbm = rlcut::sbm_generate(sbm_spec);
            rlcut::LoadedGraph lg;
            lg.graph = sbm.graph;
            for (int v = 0; v < sbm.graph.num_nodes; ++v) lg.original_ids.push_back(v);
            rlcut::write_edge_list(sbm_prefix + ".edges", lg);
            {
                std::ofstream out(sbm_prefix + ".labels");
                for (std::size_t v = 0; v < sbm.labels.size(); ++v)
                    out << v << ' ' << sbm.labels[v] << '\n';
            }
            json m;
            m["command"] = "gen-sbm";
            m["blocks"] = sbm_spec.blocks;
            m["block_size"] = sbm_spec.block_size;
            m["p_in"] = sbm_spec.p_in;
            m["p_out"] = sbm_spec.p_out;
            m["seed"] = sbm_spec.seed;
            m["nodes"] = sbm.graph.num_nodes;
            m["edges"] = sbm.graph.num_edges();
            m["outputs"] = {sbm_prefix + ".edges", sbm_prefix + ".labels"};
            write_manifest(sbm_prefix + ".manifest.json", m);
            std::cout << "nodes " << sbm.graph.num_nodes << "\nedges " << sbm.graph.num_edges()
                      << "\n";
        } else if (*train) {
            train_cfg.objective = rlcut::objective_from_name(train_objective);
            train_cfg.seed = train_pf.seed;
            train_cfg.random_selection = train_select == "random";
            if (train_select != "heuristic" && train_select != "random")
                throw rlcut::ConfigError("--node-select must be heuristic or random");
            Pipeline pipe = run_pipeline(train_pf);
            rlcut::Partitioning start =
                train_init == "random"
                    ? rlcut::random_partitioning(pipe.loaded.graph, train_cfg.k, train_pf.seed)
                    : rlcut::warm_start(pipe.loaded.graph, pipe.emb, train_cfg.k, train_pf.seed);
            if (train_init != "kmeans" && train_init != "random")
                throw rlcut::ConfigError("--init must be kmeans or random");
            auto result = rlcut::train(pipe.loaded.graph, pipe.emb, start, train_cfg);
            rlcut::CheckpointMeta meta{pipe.emb.feature_dim, pipe.emb.alpha};
            rlcut::save_checkpoint(train_out, result.params, meta);
            {
                std::ofstream log(train_out + ".log");
                log.precision(17);
                for (const auto& e : result.log)
                    log << e.update << ' ' << e.objective << ' ' << e.best << ' ' << e.reward_mean
                        << '\n';
            }
            json m = pipeline_manifest("train", train_pf);
            m["objective"] = train_objective;
            m["k"] = train_cfg.k;
            m["gamma"] = train_cfg.gamma;
            m["T"] = train_cfg.horizon;
            m["lambda"] = train_cfg.lambda;
            m["lr"] = train_cfg.lr;
            m["updates"] = train_cfg.updates;
            m["hidden"] = train_cfg.hidden_dim;
            m["init"] = train_init;
            m["node_select"] = train_select;
            m["outputs"] = {train_out, train_out + ".log"};
            write_manifest(train_out + ".manifest.json", m);
            std::cout << "best_objective " << result.best_value << "\n";
        } else if (*part) {
            auto [params, meta] = rlcut::load_checkpoint(part_ckpt);
            Pipeline pipe = run_pipeline(part_pf);
            if (pipe.emb.matrix.cols != params.input_dim)
                throw rlcut::DimensionError(
                    "checkpoint expects input dim " + std::to_string(params.input_dim) + " (" +
                    std::to_string(meta.feature_dim) + " features + alpha " +
                    std::to_string(meta.alpha) + "), got " + std::to_string(pipe.emb.matrix.cols));
            infer_cfg.random_selection = part_select == "random";
            infer_cfg.seed = part_pf.seed;
            auto kind = rlcut::objective_from_name(part_objective);
            auto start = rlcut::warm_start(pipe.loaded.graph, pipe.emb, part_k, part_pf.seed);
            auto result =
                rlcut::infer(pipe.loaded.graph, pipe.emb, params, infer_cfg, start, kind);
            rlcut::write_partition(part_out, pipe.loaded, result.best);
            json m = pipeline_manifest("partition", part_pf);
            m["checkpoint"] = part_ckpt;
            m["checkpoint_digest"] = rlcut::file_digest(part_ckpt);
            m["k"] = part_k;
            m["objective"] = part_objective;
            m["budget"] = infer_cfg.budget;
            m["patience"] = infer_cfg.patience;
            m["outputs"] = {part_out};
            write_manifest(part_out + ".manifest.json", m);
            print_report(std::cout, result.report);
        } else if (*eval_cmd) {
            if (eval_method == "kmeans") {
                if (eval_k < 1) throw rlcut::ConfigError("--method kmeans requires --k");
                Pipeline pipe = run_pipeline(eval_pf);
                const rlcut::Matrix& feats =
                    pipe.features ? *pipe.features : pipe.pos.matrix;  // featureless fallback
                auto result =
                    rlcut::kmeans_baseline(pipe.loaded.graph, feats, eval_k, eval_pf.seed);
                for (const auto& rep : result.reports) print_report(std::cout, rep);
            } else if (eval_method == "file") {
                if (eval_partition.empty()) throw rlcut::ConfigError("--partition-file is required");
                auto loaded = load_component(eval_pf);
                auto p = rlcut::read_partition(eval_partition, loaded);
                if (eval_objective == "all") {
                    for (auto kind :
                         {rlcut::ObjectiveKind::KMinCut, rlcut::ObjectiveKind::NormalizedCut,
                          rlcut::ObjectiveKind::BalancedCut, rlcut::ObjectiveKind::SparsestCut})
                        print_report(std::cout, rlcut::evaluate(loaded.graph, p, kind));
                } else {
                    print_report(std::cout,
                                 rlcut::evaluate(loaded.graph, p,
                                                 rlcut::objective_from_name(eval_objective)));
                }
            } else {
                throw rlcut::ConfigError("--method must be file or kmeans");
            }
        } else if (*oracle) {
            auto loaded = load_component(oracle_pf);
            auto result = rlcut::brute_force(loaded.graph, oracle_k,
                                             rlcut::objective_from_name(oracle_objective));
            std::cout.precision(17);
            std::cout << "optimal " << result.value << "\n";
            for (int v = 0; v < result.partitioning.num_nodes(); ++v)
                std::cout << loaded.original_ids[v] << ' ' << result.partitioning.part_of(v) << '\n';
        } else if (*warm) {
            Pipeline pipe = run_pipeline(warm_pf);
            rlcut::Partitioning p =
                warm_init == "random"
                    ? rlcut::random_partitioning(pipe.loaded.graph, warm_k, warm_pf.seed)
                    : rlcut::warm_start(pipe.loaded.graph, pipe.emb, warm_k, warm_pf.seed);
            rlcut::write_partition(warm_out, pipe.loaded, p);
            for (auto kind : {rlcut::ObjectiveKind::KMinCut, rlcut::ObjectiveKind::NormalizedCut,
                              rlcut::ObjectiveKind::BalancedCut, rlcut::ObjectiveKind::SparsestCut})
                print_report(std::cout, rlcut::evaluate(pipe.loaded.graph, p, kind));
            json m = pipeline_manifest("warmstart", warm_pf);
            m["k"] = warm_k;
            m["init"] = warm_init;
            m["outputs"] = {warm_out};
            write_manifest(warm_out + ".manifest.json", m);
        } else if (*embed) {
            Pipeline pipe = run_pipeline(embed_pf);
            rlcut::write_matrix(embed_out, pipe.emb.matrix);
            json m = pipeline_manifest("embed", embed_pf);
            m["outputs"] = {embed_out};
            write_manifest(embed_out + ".manifest.json", m);
        }
    } catch (const rlcut::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const rlcut::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const rlcut::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const rlcut::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
