#include <doctest.h>

#include "rlcut/errors.hpp"
#include "rlcut/kmeans.hpp"
#include "rlcut/posenc.hpp"
#include "test_util.hpp"

using namespace rlcut;

namespace {

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("well-separated groups are recovered for any seed") {
    auto pts = from_rows({{0, 0}, {0, 1}, {10, 10}, {10, 11}});
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        KMeansConfig cfg;
        cfg.k = 2;
        cfg.seed = seed;
        auto a = kmeans(pts, cfg);
        CHECK(a[0] == a[1]);
        CHECK(a[2] == a[3]);
        CHECK(a[0] != a[2]);
    }
}

TEST_CASE("k equals point count gives singleton clusters") {
    auto pts = from_rows({{0.0}, {1.0}, {2.0}});
    KMeansConfig cfg;
    cfg.k = 3;
    auto a = kmeans(pts, cfg);
    CHECK(a[0] != a[1]);
    CHECK(a[1] != a[2]);
    CHECK(a[0] != a[2]);
}

TEST_CASE("k = 1 puts everything together") {
    auto pts = from_rows({{0, 0}, {5, 5}, {9, 1}});
    KMeansConfig cfg;
    cfg.k = 1;
    auto a = kmeans(pts, cfg);
    CHECK(a == std::vector<int>{0, 0, 0});
}

TEST_CASE("k above point count rejected") {
    auto pts = from_rows({{0.0}, {1.0}});
    KMeansConfig cfg;
    cfg.k = 3;
    CHECK_THROWS_AS(kmeans(pts, cfg), ConfigError);
}

TEST_CASE("every cluster non-empty even with identical points") {
    auto pts = from_rows({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    KMeansConfig cfg;
    cfg.k = 3;
    cfg.seed = 4;
    auto a = kmeans(pts, cfg);
    std::vector<int> count(3, 0);
    for (int c : a) ++count[c];
    for (int c = 0; c < 3; ++c) CHECK(count[c] > 0);
}

TEST_CASE("warm start recovers the two triangles") {
    auto g = testutil::two_triangle_bridge();
    PosConfig pc;
    pc.alpha = 6;
    pc.seed = 1;
    auto pe = lipschitz_embed(g, pc);
    auto emb = initial_embeddings(g, nullptr, pe);
    int recovered = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto p = warm_start(g, emb, 2, seed);
        CHECK(p.consistent());
        CHECK(p.part_size(0) > 0);
        CHECK(p.part_size(1) > 0);
        bool triangles = p.part_of(0) == p.part_of(1) && p.part_of(1) == p.part_of(2) &&
                         p.part_of(3) == p.part_of(4) && p.part_of(4) == p.part_of(5) &&
                         p.part_of(0) != p.part_of(3);
        if (triangles) ++recovered;
    }
    CHECK(recovered >= 4);  // RWR profiles separate the triangles cleanly
}

TEST_CASE("warm start determinism and k = 1") {
    auto g = testutil::path_graph(5);
    PosConfig pc;
    pc.alpha = 5;
    auto pe = lipschitz_embed(g, pc);
    auto emb = initial_embeddings(g, nullptr, pe);
    auto a = warm_start(g, emb, 2, 7);
    auto b = warm_start(g, emb, 2, 7);
    CHECK(a.assignment() == b.assignment());
    auto one = warm_start(g, emb, 1, 7);
    CHECK(one.part_size(0) == 5);
}

TEST_CASE("random partitioning is valid and seeded") {
    auto g = testutil::path_graph(6);
    auto a = random_partitioning(g, 3, 5);
    auto b = random_partitioning(g, 3, 5);
    CHECK(a.assignment() == b.assignment());
    CHECK(a.consistent());
    for (int l = 0; l < 3; ++l) CHECK(a.part_size(l) > 0);
}
