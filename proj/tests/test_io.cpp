#include <catch2/catch_amalgamated.hpp>

#include "sigraph/io.hpp"

#include "oracles.hpp"
#include "schema_check.hpp"

using sg::Json;
using sg::Rat;

TEST_CASE("rationals serialize canonically") {
    CHECK(sg::rat_to_json(Rat(-3, 4)).get<std::string>() == "-3/4");
    CHECK(sg::rat_to_json(Rat(2)).get<std::string>() == "2/1");
    CHECK(sg::rat_from_json(Json("7/2")) == Rat(7, 2));
    CHECK(sg::rat_from_json(Json("-1")) == Rat(-1));
    CHECK_THROWS_AS(sg::rat_from_json(Json(3)), sg::Error);
    CHECK_THROWS_AS(sg::rat_from_json(Json("x/y")), sg::Error);
    CHECK_THROWS_AS(sg::rat_from_json(Json("1/0")), sg::Error);
    for (int i = 0; i < 20; ++i) {
        Rat r(i * 7 - 50, 1 + i * 3);
        CHECK(sg::rat_from_json(sg::rat_to_json(r)) == r);
    }
}

TEST_CASE("graph json round trip and schema") {
    oracle::Rng rng(121);
    Json schema = schema::load_schema("graph.schema.json");
    for (int trial = 0; trial < 10; ++trial) {
        sg::Graph g = oracle::random_graph(rng, 2 + rng.below(8), 40);
        Json j = sg::graph_to_json(g);
        CHECK_FALSE(schema::validate(schema, j).has_value());
        sg::Graph back = sg::graph_from_json(j);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
    CHECK_THROWS_AS(sg::graph_from_json(Json{{"n", 3}}), sg::Error);
    CHECK_THROWS_AS(sg::graph_from_json(Json{{"n", 3}, {"edges", Json::array({Json::array({1})})}}),
                    sg::Error);
}

TEST_CASE("listing json round trip and schema") {
    sg::Listing l;
    l.lists = {{0, 1}, {2}, {0, 3}};
    Json j = sg::listing_to_json(l);
    CHECK_FALSE(schema::validate(schema::load_schema("listing.schema.json"), j).has_value());
    CHECK(sg::listing_from_json(j).lists == l.lists);

    Json bad_key{{"lists", Json{{"x", Json::array({1})}}}};
    CHECK_THROWS_AS(sg::listing_from_json(bad_key), sg::Error);
    Json out_of_range{{"lists", Json{{"5", Json::array({1})}}}};
    CHECK_THROWS_AS(sg::listing_from_json(out_of_range), sg::Error);
    CHECK_THROWS_AS(sg::listing_from_json(Json::object()), sg::Error);
}

TEST_CASE("certificates and adversary bundles match their schemas") {
    sg::Graph tri = sg::Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    auto cert = sg::find_defeating_listing(tri, 2);
    REQUIRE(cert.has_value());
    Json cj = sg::defeat_certificate_to_json(*cert);
    CHECK_FALSE(schema::validate(schema::load_schema("certificate.schema.json"), cj).has_value());
    CHECK(cj["exhaustive"].get<bool>());

    auto adv = sg::kmn_adversary_listing(2);
    Json aj = sg::adversary_to_json(adv);
    CHECK_FALSE(schema::validate(schema::load_schema("adversary.schema.json"), aj).has_value());
    sg::Graph g = sg::graph_from_json(aj["graph"]);
    sg::Listing l = sg::listing_from_json(aj["listing"]);
    CHECK(g.edges() == adv.graph.edges());
    CHECK(l.lists == adv.listing.lists);
}

TEST_CASE("coordinate and point json") {
    sg::Coord rat(Rat(3, 2));
    sg::Coord root = sg::Coord::root(Rat(3, 4));
    sg::Coord neg = sg::Coord::root(Rat(3, 4), -1);
    CHECK(sg::coord_to_json(rat) == Json{{"rat", "3/2"}});
    CHECK(sg::coord_to_json(root) == Json{{"sqrt", "3/4"}});
    CHECK(sg::coord_to_json(neg) == Json{{"sqrt", "3/4"}, {"neg", true}});
    CHECK(sg::coord_from_json(sg::coord_to_json(rat)) == rat);
    CHECK(sg::coord_from_json(sg::coord_to_json(root)) == root);
    CHECK(sg::coord_from_json(sg::coord_to_json(neg)) == neg);
    CHECK_THROWS_AS(sg::coord_from_json(Json{{"weird", 1}}), sg::Error);

    sg::ExactPoint p{rat, root, sg::Coord(0)};
    CHECK(sg::point_from_json(sg::point_to_json(p)) == p);
}

TEST_CASE("witness json matches the schemas") {
    auto x4 = sg::witness_x4(Rat(2), 3);
    Json j4 = sg::x4_witness_to_json(x4);
    auto err4 = schema::validate(schema::load_schema("witness_x4.schema.json"), j4);
    INFO(err4.value_or(""));
    CHECK_FALSE(err4.has_value());
    CHECK(j4["verification"]["all_exact"].get<bool>());

    auto x3 = sg::witness_x3(sg::parse_dspec("tail:1,4"), Rat(1, 4), 2, 3);
    Json j3 = sg::x3_witness_to_json(x3);
    auto err3 = schema::validate(schema::load_schema("witness_x3.schema.json"), j3);
    INFO(err3.value_or(""));
    CHECK_FALSE(err3.has_value());
    CHECK(j3["tail"]["q_sq"].get<std::string>() == "4/1");
}

TEST_CASE("classification json") {
    Json j = sg::classify_to_json(sg::classify_distance_graph(3, sg::parse_dspec("tail:1,4")));
    CHECK_FALSE(schema::validate(schema::load_schema("classify.schema.json"), j).has_value());
    CHECK(j["verdict"] == "uncountable");
    CHECK(j["witness_plan"] == "x3");
    Json c = sg::classify_to_json(sg::classify_distance_graph(2, sg::parse_dspec("sq:1")));
    CHECK(c["verdict"] == "countable");
    CHECK(c["witness_plan"] == "none");
}

TEST_CASE("interval and sidecar json") {
    Json iv = sg::cantor_interval_to_json(sg::cantor_interval(6));
    CHECK(iv["word"] == "01");
    CHECK(iv["lo"] == "2/9");
    CHECK(iv["hi"] == "1/3");
    CHECK(iv["depth"] == 2);

    auto cg = sg::cantor_graph(2);
    Json side = sg::cantor_sidecar_to_json(cg);
    auto err = schema::validate(schema::load_schema("cantor_sidecar.schema.json"), side);
    INFO(err.value_or(""));
    CHECK_FALSE(err.has_value());
    CHECK(side["interval_count"] == 7);
    CHECK(side["branch_count"] == 4);
    REQUIRE(side["vertices"].size() == 11);
    CHECK(side["vertices"][0]["kind"] == "interval");
    CHECK(side["vertices"][7]["kind"] == "branch");
    CHECK(side["vertices"][7]["word"] == "00");
}

TEST_CASE("hypercube embedding json") {
    auto emb = sg::hypercube_embedding(2);
    Json j = sg::hypercube_embedding_to_json(emb);
    auto err = schema::validate(schema::load_schema("embedding.schema.json"), j);
    INFO(err.value_or(""));
    CHECK_FALSE(err.has_value());
    CHECK(j["word_map"].size() == 4);
    CHECK(j["word_map"]["00"] == 0);
    CHECK(j["word_map"]["11"] == 3);
}

TEST_CASE("semialgebraic json round trips") {
    sg::SigmaFamily f = sg::dspec_sigma_family(2, sg::parse_dspec("sq:1;tail:4,9"), 2);
    Json j = sg::sigma_family_to_json(f);
    sg::SigmaFamily back = sg::sigma_family_from_json(j);
    CHECK(sg::sigma_family_to_json(back) == j);
    CHECK(back.members.size() == 3);

    // boolean structure survives
    auto atom = sg::SemialgFormula::atom(sg::Polynomial::variable(2, 0), sg::Rel::gt);
    auto formula = sg::SemialgFormula::neg(sg::SemialgFormula::disj(
        {atom, sg::SemialgFormula::conj({atom, atom})}));
    sg::SemialgSet s{2, formula};
    Json sj = sg::semialg_set_to_json(s);
    CHECK(sg::semialg_set_to_json(sg::semialg_set_from_json(sj)) == sj);

    CHECK_THROWS_AS(sg::formula_from_json(Json{{"op", "xor"}, {"args", Json::array()}}, 2),
                    sg::Error);
    CHECK_THROWS_AS(sg::formula_from_json(Json{{"poly", Json{{"1", "1/1"}}}, {"rel", "!"}}, 1),
                    sg::Error);
    CHECK_THROWS_AS(sg::formula_from_json(Json{{"poly", Json{{"1,2", "1/1"}}}, {"rel", ">"}}, 1),
                    sg::Error);
    CHECK_THROWS_AS(sg::polynomial_from_json(Json{{"a,b", "1/1"}}, 2), sg::Error);
    CHECK_THROWS_AS(sg::semialg_set_from_json(Json{{"dim", 0}, {"formula", Json::object()}}),
                    sg::Error);
}

TEST_CASE("envelope schema sanity") {
    Json schema = schema::load_schema("envelope.schema.json");
    Json good{{"command", "chi"},
              {"inputs", Json::object()},
              {"result", 3},
              {"stats", Json{{"elapsed_ms", 1}}}};
    CHECK_FALSE(schema::validate(schema, good).has_value());
    Json missing{{"command", "chi"}, {"inputs", Json::object()}, {"stats", Json::object()}};
    CHECK(schema::validate(schema, missing).has_value());
    Json extra = good;
    extra["garbage"] = 1;
    CHECK(schema::validate(schema, extra).has_value());
}

TEST_CASE("the schema checker itself rejects mismatches") {
    Json schema{{"type", "object"},
                {"required", Json::array({"a"})},
                {"properties", Json{{"a", Json{{"type", "integer"}}}}},
                {"additionalProperties", false}};
    CHECK_FALSE(schema::validate(schema, Json{{"a", 1}}).has_value());
    CHECK(schema::validate(schema, Json{{"a", "1"}}).has_value());
    CHECK(schema::validate(schema, Json::object()).has_value());
    CHECK(schema::validate(schema, Json{{"a", 1}, {"b", 2}}).has_value());

    Json pat{{"type", "object"},
             {"patternProperties", Json{{"^[01]+$", Json{{"type", "integer"}}}}},
             {"additionalProperties", false}};
    CHECK_FALSE(schema::validate(pat, Json{{"0110", 5}}).has_value());
    CHECK(schema::validate(pat, Json{{"012", 5}}).has_value());
}
