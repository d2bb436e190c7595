#include <catch2/catch_amalgamated.hpp>

#include "sigraph/coloring.hpp"
#include "sigraph/families.hpp"

#include "oracles.hpp"

using sg::Graph;
using sg::Listing;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

}  // namespace

TEST_CASE("chromatic number on named graphs") {
    CHECK(sg::chromatic_number(Graph(0)).value == 0);
    CHECK(sg::chromatic_number(Graph(5)).value == 1);
    CHECK(sg::chromatic_number(sg::complete_bipartite(2, 6)).value == 2);
    CHECK(sg::chromatic_number(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})).value == 3);
    CHECK(sg::chromatic_number(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))
              .value == 3);
    CHECK(sg::chromatic_number(petersen()).value == 3);
}

TEST_CASE("chromatic number returns a proper witness and matches brute force") {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + rng.below(7), 10 + rng.below(70));
        auto r = sg::chromatic_number(g);
        INFO(sg::graph_to_text(g));
        CHECK(r.value == oracle::chromatic_brute(g));
        REQUIRE(sg::is_proper_coloring(g, r.coloring));
        for (int c : r.coloring) CHECK((c >= 0 && c < r.value));
    }
}

TEST_CASE("list_colorable solves and refuses exactly like the product scan") {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + rng.below(5), 20 + rng.below(60));
        Listing l;
        l.lists.resize(g.vertex_count());
        for (auto& lst : l.lists) {
            int len = 1 + rng.below(3);
            for (int i = 0; i < len; ++i) lst.push_back(rng.below(4));
        }
        l.normalize();
        auto got = sg::list_colorable(g, l);
        auto want = oracle::solve_listing_brute(g, l.lists);
        INFO(sg::graph_to_text(g));
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(sg::is_proper_coloring(g, *got));
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(std::find(l.lists[v].begin(), l.lists[v].end(), (*got)[v]) !=
                      l.lists[v].end());
        }
    }
}

TEST_CASE("list_colorable validates the listing") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    Listing short_list;
    short_list.lists = {{0}};
    CHECK_THROWS_AS(sg::list_colorable(g, short_list), sg::Error);
    Listing empty_list;
    empty_list.lists = {{0}, {}};
    CHECK_THROWS_AS(sg::list_colorable(g, empty_list), sg::Error);

    Listing shared;
    shared.lists = {{0}, {0}};
    CHECK_FALSE(sg::list_colorable(g, shared).has_value());
}

TEST_CASE("coloring number via smallest-last equals the all-orders minimum") {
    CHECK(sg::coloring_number_witness(Graph(0)).value == 0);
    CHECK(sg::coloring_number_witness(Graph(4)).value == 1);
    CHECK(sg::coloring_number_witness(sg::complete_bipartite(2, 6)).value == 3);
    CHECK(sg::coloring_number_witness(petersen()).value == 4);

    oracle::Rng rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + rng.below(7), 10 + rng.below(70));
        auto r = sg::coloring_number_witness(g);
        INFO(sg::graph_to_text(g));
        CHECK(r.value == oracle::coloring_number_brute(g));

        // witness consistency: back degrees match the ordering and the max
        int n = g.vertex_count();
        REQUIRE(static_cast<int>(r.witness.order.size()) == n);
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[r.witness.order[i]] = i;
        int max_back = 0;
        for (int i = 0; i < n; ++i) {
            int back = 0;
            for (int w : g.neighbors(r.witness.order[i]))
                if (pos[w] < i) ++back;
            CHECK(back == r.witness.back_degrees[i]);
            max_back = std::max(max_back, back);
        }
        CHECK(r.value == 1 + max_back);
    }
}

TEST_CASE("truncated tower coloring number, frozen against the all-orders scan") {
    sg::HTruncation h = sg::h_truncation(3, {2, 2, 2});
    CHECK(oracle::coloring_number_brute(h.graph) == 3);
    CHECK(sg::coloring_number_witness(h.graph).value == 3);
    CHECK(sg::chromatic_number(h.graph).value == 2);  // bipartite by construction
}

TEST_CASE("extend_listing_fresh pads with private colors") {
    Graph host = Graph::from_edges(2, {{0, 1}});
    Listing sub;
    sub.lists = {{5}};
    Listing full = sg::extend_listing_fresh(host, {0}, sub, 1);
    REQUIRE(full.size() == 2);
    CHECK(full.lists[0] == std::vector<int>{5});
    CHECK(full.lists[1] == std::vector<int>{6});
    CHECK(sg::list_colorable(host, full).has_value());

    // identity on a full sub
    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    Listing all;
    all.lists = {{0, 1}, {0, 1}, {0, 1}};
    Listing same = sg::extend_listing_fresh(tri, {0, 1, 2}, all, 2);
    CHECK(same.lists == all.lists);

    // sub vertices may come in any order
    Listing pair;
    pair.lists = {{7}, {7}};
    Listing lifted = sg::extend_listing_fresh(tri, {2, 0}, pair, 1);
    CHECK(lifted.lists[0] == std::vector<int>{7});
    CHECK(lifted.lists[2] == std::vector<int>{7});
    CHECK_FALSE(sg::list_colorable(tri, lifted).has_value());  // 0 and 2 are adjacent
}

TEST_CASE("extend_listing_fresh rejects malformed subs") {
    Graph host = Graph::from_edges(3, {{0, 1}});
    Listing one;
    one.lists = {{0}};
    CHECK_THROWS_AS(sg::extend_listing_fresh(host, {0, 1}, one, 1), sg::Error);
    Listing dup;
    dup.lists = {{0}, {1}};
    CHECK_THROWS_AS(sg::extend_listing_fresh(host, {0, 0}, dup, 1), sg::Error);
    Listing hole;
    hole.lists = {{}, {1}};
    CHECK_THROWS_AS(sg::extend_listing_fresh(host, {0, 1}, hole, 1), sg::Error);
    CHECK_THROWS_AS(sg::extend_listing_fresh(host, {0}, one, 0), sg::Error);
}

TEST_CASE("extension is colorable exactly when the sub listing is") {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        Graph host = oracle::random_graph(rng, 3 + rng.below(4), 30 + rng.below(40));
        std::vector<int> sub;
        for (int v = 0; v < host.vertex_count(); ++v)
            if (rng.below(2)) sub.push_back(v);
        if (sub.empty()) sub.push_back(0);
        int k = 1 + rng.below(2);
        Listing sl;
        sl.lists.resize(sub.size());
        for (auto& lst : sl.lists)
            while (static_cast<int>(lst.size()) < k) {
                int c = rng.below(4);
                if (std::find(lst.begin(), lst.end(), c) == lst.end()) lst.push_back(c);
            }
        sl.normalize();

        Listing full = sg::extend_listing_fresh(host, sub, sl, k);
        auto induced = sg::induced_subgraph(host, sub);
        Listing on_induced;
        on_induced.lists.resize(sub.size());
        for (std::size_t p = 0; p < induced.vertices.size(); ++p) {
            auto at = std::find(sub.begin(), sub.end(), induced.vertices[p]);
            on_induced.lists[p] = sl.lists[at - sub.begin()];
        }
        INFO(sg::graph_to_text(host));
        CHECK(sg::list_colorable(host, full).has_value() ==
              sg::list_colorable(induced.graph, on_induced).has_value());
    }
}
