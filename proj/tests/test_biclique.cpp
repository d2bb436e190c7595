#include <catch2/catch_amalgamated.hpp>

#include "sigraph/biclique.hpp"
#include "sigraph/families.hpp"

#include "oracles.hpp"

using sg::Graph;

TEST_CASE("check_biclique is the literal definition") {
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(sg::check_biclique(c4, {0, 2}, {1, 3}));
    CHECK_FALSE(sg::check_biclique(c4, {0, 1}, {2, 3}));
    CHECK_FALSE(sg::check_biclique(c4, {0}, {0}));  // parts must be disjoint
}

TEST_CASE("find_biclique on small named graphs") {
    Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(sg::find_biclique(triangle, 2, 2).has_value());

    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto w = sg::find_biclique(c4, 2, 2);
    REQUIRE(w.has_value());
    CHECK(w->left == std::vector<int>{0, 2});
    CHECK(w->right == std::vector<int>{1, 3});

    Graph k33 = sg::complete_bipartite(3, 3);
    auto w33 = sg::find_biclique(k33, 3, 3);
    REQUIRE(w33.has_value());
    CHECK(sg::check_biclique(k33, w33->left, w33->right));
    CHECK_FALSE(sg::find_biclique(k33, 3, 4).has_value());
    CHECK_FALSE(sg::find_biclique(k33, 4, 1).has_value());
}

TEST_CASE("find_biclique rejects bad part sizes") {
    Graph g(3);
    CHECK_THROWS_AS(sg::find_biclique(g, 0, 1), sg::Error);
    CHECK_THROWS_AS(sg::find_biclique(g, 1, 0), sg::Error);
}

TEST_CASE("find_biclique agrees with the definition scan") {
    oracle::Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 4 + rng.below(7), 20 + rng.below(60));
        for (int m = 1; m <= 3; ++m)
            for (int t = 1; t <= 4; ++t) {
                auto w = sg::find_biclique(g, m, t);
                bool expect = oracle::has_biclique_brute(g, m, t);
                INFO("n=" << g.vertex_count() << " m=" << m << " t=" << t);
                REQUIRE(w.has_value() == expect);
                if (w) {
                    CHECK(static_cast<int>(w->left.size()) == m);
                    CHECK(static_cast<int>(w->right.size()) == t);
                    CHECK(sg::check_biclique(g, w->left, w->right));
                }
            }
    }
}

TEST_CASE("find_biclique honors its budget") {
    Graph g = sg::complete_bipartite(4, 4);
    bool threw = false;
    try {
        sg::find_biclique(g, 2, 2, sg::SearchOptions{1});
    } catch (const sg::Error& e) {
        threw = e.code() == sg::Errc::search_budget_exceeded;
    }
    CHECK(threw);
}

TEST_CASE("verify_embedding classifies violations") {
    Graph host = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph guest = Graph::from_edges(3, {{0, 1}, {1, 2}});

    auto ok = sg::verify_embedding(host, guest, {0, 1, 2});
    CHECK(ok.ok);

    // the path embeds as a subgraph around the cycle, but host adds edge 3-0
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto sub = sg::verify_embedding(host, p4, {0, 1, 2, 3}, false);
    CHECK(sub.ok);
    auto ind = sg::verify_embedding(host, p4, {0, 1, 2, 3}, true);
    REQUIRE_FALSE(ind.ok);
    REQUIRE(ind.violations.size() == 1);
    CHECK(ind.violations[0].kind == sg::EmbeddingViolation::Kind::extra_edge);
    CHECK(ind.violations[0].describe().find("maps onto an edge") != std::string::npos);

    auto missing = sg::verify_embedding(host, guest, {0, 1, 3});
    REQUIRE_FALSE(missing.ok);
    CHECK(missing.violations[0].kind == sg::EmbeddingViolation::Kind::missing_edge);

    auto clash = sg::verify_embedding(host, guest, {0, 1, 1});
    REQUIRE_FALSE(clash.ok);
    CHECK(clash.violations[0].kind == sg::EmbeddingViolation::Kind::not_injective);

    auto range = sg::verify_embedding(host, guest, {0, 1, 9});
    REQUIRE_FALSE(range.ok);
    CHECK(range.violations[0].kind == sg::EmbeddingViolation::Kind::out_of_range);

    CHECK_THROWS_AS(sg::verify_embedding(host, guest, {0, 1}), sg::Error);
}
