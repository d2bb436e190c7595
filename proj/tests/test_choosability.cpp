#include <catch2/catch_amalgamated.hpp>

#include "sigraph/choosability.hpp"

#include "oracles.hpp"

using sg::Graph;
using sg::Listing;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

void check_certificate(const Graph& g, const sg::DefeatCertificate& cert, int k) {
    CHECK(cert.exhaustive);
    CHECK(cert.listing.size() == g.vertex_count());
    CHECK(cert.listing.is_k_listing(k));
    CHECK_FALSE(sg::list_colorable(g, cert.listing).has_value());
}

}  // namespace

TEST_CASE("binomial is exact") {
    CHECK(sg::binomial(4, 2) == 6);
    CHECK(sg::binomial(9, 3) == 84);
    CHECK(sg::binomial(16, 4) == 1820);
    CHECK(sg::binomial(3, 5) == 0);
    CHECK(sg::binomial(25, 5) == 53130);
}

TEST_CASE("adversary listing shape and uncolorability") {
    auto adv1 = sg::kmn_adversary_listing(1);
    CHECK(adv1.right_count == 1);
    CHECK(adv1.graph.vertex_count() == 2);
    CHECK(adv1.listing.lists == std::vector<std::vector<int>>{{0}, {0}});
    CHECK_FALSE(sg::list_colorable(adv1.graph, adv1.listing).has_value());

    auto adv2 = sg::kmn_adversary_listing(2);
    CHECK(adv2.right_count == 6);
    CHECK(adv2.graph.vertex_count() == 8);
    CHECK(adv2.graph.edge_count() == 12);
    CHECK(adv2.listing.lists[0] == std::vector<int>{0, 1});
    CHECK(adv2.listing.lists[1] == std::vector<int>{2, 3});
    CHECK(adv2.listing.lists[2] == std::vector<int>{0, 1});  // first 2-subset, lex
    CHECK(adv2.listing.lists[7] == std::vector<int>{2, 3});  // last
    CHECK(adv2.listing.is_k_listing(2));
    CHECK_FALSE(sg::list_colorable(adv2.graph, adv2.listing).has_value());

    auto adv3 = sg::kmn_adversary_listing(3);
    CHECK(adv3.right_count == 84);
    CHECK(adv3.listing.lists[3] == std::vector<int>{0, 1, 2});
    CHECK(adv3.listing.lists[86] == std::vector<int>{6, 7, 8});
    CHECK_FALSE(sg::list_colorable(adv3.graph, adv3.listing).has_value());

    CHECK_THROWS_AS(sg::kmn_adversary_listing(0), sg::Error);
    bool overflowed = false;
    try {
        sg::kmn_adversary_listing(4, 100);
    } catch (const sg::Error& e) {
        overflowed = e.code() == sg::Errc::size_overflow;
    }
    CHECK(overflowed);
}

TEST_CASE("adversary stays uncolorable under extra right vertices") {
    auto adv = sg::kmn_adversary_listing(2);
    Graph bigger = sg::complete_bipartite(2, 8);
    Listing l = adv.listing;
    l.lists.push_back({0, 2});
    l.lists.push_back({1, 3});
    CHECK_FALSE(sg::list_colorable(bigger, l).has_value());
}

TEST_CASE("defeating listings on the classic small cases") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    auto c = sg::find_defeating_listing(k2, 1);
    REQUIRE(c.has_value());
    check_certificate(k2, *c, 1);
    CHECK(c->listing.lists == std::vector<std::vector<int>>{{0}, {0}});

    CHECK_FALSE(sg::find_defeating_listing(Graph(1), 1).has_value());

    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(sg::find_defeating_listing(p3, 2).has_value());

    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    auto ct = sg::find_defeating_listing(tri, 2);
    REQUIRE(ct.has_value());
    check_certificate(tri, *ct, 2);
    CHECK(ct->listing.lists == std::vector<std::vector<int>>{{0, 1}, {0, 1}, {0, 1}});

    // even cycles are 2-choosable, odd ones are not
    CHECK_FALSE(sg::find_defeating_listing(cycle(4), 2).has_value());
    CHECK_FALSE(sg::find_defeating_listing(cycle(6), 2).has_value());
    auto c5 = sg::find_defeating_listing(cycle(5), 2);
    REQUIRE(c5.has_value());
    check_certificate(cycle(5), *c5, 2);
}

TEST_CASE("a defeating 1-listing exists exactly when there is an edge") {
    oracle::Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + rng.below(6), rng.below(60));
        auto c = sg::find_defeating_listing(g, 1);
        INFO(sg::graph_to_text(g));
        CHECK(c.has_value() == (g.edge_count() > 0));
        if (c) check_certificate(g, *c, 1);
    }
}

TEST_CASE("defeat search agrees with the full listing scan") {
    // every graph on 3 vertices, k = 2
    for (int mask = 0; mask < 8; ++mask) {
        Graph g(3);
        if (mask & 1) g.add_edge(0, 1);
        if (mask & 2) g.add_edge(0, 2);
        if (mask & 4) g.add_edge(1, 2);
        auto c = sg::find_defeating_listing(g, 2);
        INFO("mask = " << mask);
        CHECK(c.has_value() == oracle::has_bad_k_listing_brute(g, 2));
        if (c) check_certificate(g, *c, 2);
    }
    // a few 4-vertex graphs
    oracle::Rng rng(81);
    for (int trial = 0; trial < 4; ++trial) {
        Graph g = oracle::random_graph(rng, 4, 40 + rng.below(50));
        auto c = sg::find_defeating_listing(g, 2);
        INFO(sg::graph_to_text(g));
        CHECK(c.has_value() == oracle::has_bad_k_listing_brute(g, 2));
        if (c) check_certificate(g, *c, 2);
    }
}

TEST_CASE("defeat search honors its budget") {
    bool threw = false;
    try {
        sg::find_defeating_listing(sg::complete_bipartite(2, 6), 2, sg::SearchOptions{100});
    } catch (const sg::Error& e) {
        threw = e.code() == sg::Errc::search_budget_exceeded;
    }
    CHECK(threw);
    CHECK_THROWS_AS(sg::find_defeating_listing(Graph(2), 0), sg::Error);
}

TEST_CASE("exact list-chromatic numbers of small graphs") {
    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    auto rt = sg::list_chromatic_exact(tri, 3);
    REQUIRE(rt.value.has_value());
    CHECK(*rt.value == 3);
    CHECK(rt.certificates.size() == 2);

    auto rp = sg::list_chromatic_exact(Graph::from_edges(3, {{0, 1}, {1, 2}}), 3);
    REQUIRE(rp.value.has_value());
    CHECK(*rp.value == 2);

    auto rc4 = sg::list_chromatic_exact(cycle(4), 3);
    REQUIRE(rc4.value.has_value());
    CHECK(*rc4.value == 2);

    auto rstar = sg::list_chromatic_exact(sg::complete_bipartite(1, 5), 3);
    REQUIRE(rstar.value.has_value());
    CHECK(*rstar.value == 2);

    auto rc5 = sg::list_chromatic_exact(cycle(5), 3);
    REQUIRE(rc5.value.has_value());
    CHECK(*rc5.value == 3);

    // tight on both sides: K(3,3) is defeated at 2 but the exhaustive scan
    // clears every 3-listing
    auto r33 = sg::list_chromatic_exact(sg::complete_bipartite(3, 3), 3);
    REQUIRE(r33.value.has_value());
    CHECK(*r33.value == 3);
    CHECK(r33.certificates.size() == 2);
    CHECK_FALSE(sg::list_colorable(sg::complete_bipartite(3, 3), r33.certificates[1].listing)
                    .has_value());

    CHECK(sg::list_chromatic_exact(Graph(0), 2).value == 0);
    CHECK(sg::list_chromatic_exact(Graph(3), 2).value == 1);

    // k_max too small: undetermined, certificates for every probed k
    auto low = sg::list_chromatic_exact(tri, 2);
    CHECK_FALSE(low.value.has_value());
    CHECK(low.k_max == 2);
    CHECK(low.certificates.size() == 2);
    CHECK_THROWS_AS(sg::list_chromatic_exact(tri, -1), sg::Error);
}

TEST_CASE("defeated k forces the coloring number above k") {
    oracle::Rng rng(91);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + rng.below(4), 30 + rng.below(50));
        int col = sg::coloring_number_witness(g).value;
        for (int k = 1; k <= 2; ++k) {
            auto c = sg::find_defeating_listing(g, k);
            if (c) {
                INFO(sg::graph_to_text(g) << " k=" << k);
                CHECK(col > k);
            }
        }
    }
}
