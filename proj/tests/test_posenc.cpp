#include <doctest.h>

#include <cmath>
#include <numeric>

#include "rlcut/errors.hpp"
#include "rlcut/posenc.hpp"
#include "test_util.hpp"

using namespace rlcut;

TEST_CASE("two-node closed form") {
    auto g = testutil::path_graph(2);
    double c = 0.85;
    auto r = rwr(g, 0, c, 100);
    CHECK(r[0] == doctest::Approx(1.0 / (1.0 + c)).epsilon(1e-6));
    CHECK(r[1] == doctest::Approx(c / (1.0 + c)).epsilon(1e-6));
}

TEST_CASE("single-node graph returns the unit vector") {
    auto g = Graph::from_edges(1, {});
    CHECK(rwr(g, 0, 0.85, 100) == std::vector<double>{1.0});
}

TEST_CASE("isolated node is a precondition error") {
    auto g = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(rwr(g, 0, 0.85, 10), ConfigError);
}

TEST_CASE("mass conservation at every iteration") {
    std::mt19937_64 rng(23);
    int tested = 0;
    while (tested < 20) {
        auto g = testutil::random_graph(25, 0.25, rng);
        auto kept = largest_component_nodes(g);
        auto sub = induced_subgraph(g, kept);
        if (sub.num_nodes < 2) continue;
        // checking every prefix length exercises every intermediate iterate
        for (int beta : {1, 2, 5, 20}) {
            auto r = rwr(sub, 0, 0.85, beta);
            double sum = std::accumulate(r.begin(), r.end(), 0.0);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
        ++tested;
    }
}

TEST_CASE("geometric convergence at beta = 100") {
    auto g = testutil::cycle_graph(8);
    auto a = rwr(g, 0, 0.85, 99);
    auto b = rwr(g, 0, 0.85, 100);
    double diff = 0;
    for (int i = 0; i < 8; ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    CHECK(diff < 1e-7);
}

TEST_CASE("locality on a cycle: mass symmetric and non-increasing with distance") {
    // (a path's endpoint anchor forwards all its mass, so node 1 can out-score
    // the anchor there; the regular cycle gives a clean locality statement)
    auto g = testutil::cycle_graph(10);
    auto r = rwr(g, 0, 0.85, 100);
    for (int d = 1; d <= 5; ++d) CHECK(r[d] == doctest::Approx(r[10 - d]).epsilon(1e-12));
    for (int d = 0; d < 5; ++d) CHECK(r[d] >= r[d + 1] - 1e-12);
}

TEST_CASE("lipschitz embedding") {
    auto g = testutil::path_graph(3);
    PosConfig cfg;
    cfg.alpha = 3;
    cfg.seed = 9;

    SUBCASE("columns sum to one") {
        auto pe = lipschitz_embed(g, cfg);
        CHECK(pe.matrix.rows == 3);
        CHECK(pe.matrix.cols == 3);
        for (int j = 0; j < 3; ++j) {
            double sum = 0;
            for (int u = 0; u < 3; ++u) sum += pe.matrix.at(u, j);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("deterministic under seed") {
        auto a = lipschitz_embed(g, cfg);
        auto b = lipschitz_embed(g, cfg);
        CHECK(a.anchors == b.anchors);
        CHECK(a.matrix.data == b.matrix.data);
    }
    SUBCASE("alpha above |V| rejected") {
        cfg.alpha = 4;
        CHECK_THROWS_AS(lipschitz_embed(g, cfg), ConfigError);
    }
}

TEST_CASE("restart mass dominates at the anchor on the 2-path") {
    auto g = testutil::path_graph(2);
    PosConfig cfg;
    cfg.alpha = 2;
    auto pe = lipschitz_embed(g, cfg);
    for (int j = 0; j < 2; ++j) {
        int anchor = pe.anchors[j];
        for (int u = 0; u < 2; ++u)
            if (u != anchor) CHECK(pe.matrix.at(anchor, j) > pe.matrix.at(u, j));
    }
}

TEST_CASE("initial embeddings concatenate features and positions") {
    auto g = testutil::path_graph(3);
    PosConfig cfg;
    cfg.alpha = 3;
    auto pe = lipschitz_embed(g, cfg);
    FeatureMatrix x(3, 2);
    for (int u = 0; u < 3; ++u) {
        x.at(u, 0) = u;
        x.at(u, 1) = 10.0 * u;
    }
    auto emb = initial_embeddings(g, &x, pe);
    CHECK(emb.matrix.cols == 5);
    for (int u = 0; u < 3; ++u) {
        CHECK(emb.matrix.at(u, 0) == x.at(u, 0));
        CHECK(emb.matrix.at(u, 1) == x.at(u, 1));
        for (int j = 0; j < 3; ++j) CHECK(emb.matrix.at(u, 2 + j) == pe.matrix.at(u, j));
    }

    SUBCASE("featureless graphs use positions alone") {
        auto bare = initial_embeddings(g, nullptr, pe);
        CHECK(bare.matrix.cols == 3);
        CHECK(bare.feature_dim == 0);
    }
    SUBCASE("row mismatch rejected") {
        FeatureMatrix bad(2, 2);
        CHECK_THROWS_AS(initial_embeddings(g, &bad, pe), DimensionError);
    }
}
