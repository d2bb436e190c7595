#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sigraph/biclique.hpp"
#include "sigraph/choosability.hpp"
#include "sigraph/coloring.hpp"
#include "sigraph/euclid.hpp"
#include "sigraph/families.hpp"
#include "sigraph/graph.hpp"
#include "sigraph/salg.hpp"

namespace sigraph {

using Json = nlohmann::ordered_json;

// ---- rationals -----------------------------------------------------------

inline Json rat_to_json(const Rat& r) { return rat_to_string(r); }

inline Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw Error(Errc::parse_error, "rational must be a \"num/den\" string");
    return parse_rat(j.get<std::string>());
}

// ---- graphs ----------------------------------------------------------------

inline Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error(Errc::parse_error, "graph JSON needs \"n\" and \"edges\"");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw Error(Errc::parse_error, "edge must be a [u, v] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(j.at("n").get<int>(), edges);
}

// ---- listings and certificates ---------------------------------------------

inline Json listing_to_json(const Listing& l) {
    Json lists = Json::object();
    for (int v = 0; v < l.size(); ++v) lists[std::to_string(v)] = l.lists[v];
    return Json{{"lists", std::move(lists)}};
}

inline Listing listing_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lists"))
        throw Error(Errc::parse_error, "listing JSON needs \"lists\"");
    const Json& lists = j.at("lists");
    Listing l;
    l.lists.resize(lists.size());
    for (const auto& [key, val] : lists.items()) {
        int v;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            throw Error(Errc::parse_error, "listing key '" + key + "' is not a vertex id");
        }
        if (v < 0 || v >= static_cast<int>(lists.size()))
            throw Error(Errc::parse_error, "listing key " + key + " out of range");
        l.lists[v] = val.get<std::vector<int>>();
    }
    l.normalize();
    return l;
}

inline Json defeat_certificate_to_json(const DefeatCertificate& c) {
    return Json{{"listing", listing_to_json(c.listing)},
                {"exhaustive", c.exhaustive},
                {"stats", Json{{"expansions", c.stats.expansions}}}};
}

inline Json adversary_to_json(const AdversaryListing& adv) {
    return Json{{"m", adv.m},
                {"right_count", adv.right_count},
                {"graph", graph_to_json(adv.graph)},
                {"listing", listing_to_json(adv.listing)}};
}

inline Json biclique_to_json(const BicliqueWitness& w) {
    return Json{{"left", w.left}, {"right", w.right}};
}

inline Json ordering_witness_to_json(const OrderingWitness& w) {
    return Json{{"order", w.order}, {"back_degrees", w.back_degrees}};
}

// ---- geometry ----------------------------------------------------------------

inline Json coord_to_json(const Coord& c) {
    if (c.is_rational()) return Json{{"rat", rat_to_string(c.rational_value())}};
    Json j{{"sqrt", rat_to_string(c.radicand())}};
    if (c.sign() < 0) j["neg"] = true;
    return j;
}

inline Coord coord_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, "coordinate must be an object");
    if (j.contains("rat")) return Coord(rat_from_json(j.at("rat")));
    if (j.contains("sqrt"))
        return Coord::root(rat_from_json(j.at("sqrt")),
                           j.value("neg", false) ? -1 : 1);
    throw Error(Errc::parse_error, "coordinate needs \"rat\" or \"sqrt\"");
}

inline Json point_to_json(const ExactPoint& p) {
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(coord_to_json(c));
    return Json{{"coords", std::move(coords)}};
}

inline ExactPoint point_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coords"))
        throw Error(Errc::parse_error, "point JSON needs \"coords\"");
    ExactPoint p;
    for (const auto& c : j.at("coords")) p.coords.push_back(coord_from_json(c));
    return p;
}

inline Json points_to_json(const std::vector<ExactPoint>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

inline Json rats_to_json(const std::vector<Rat>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) arr.push_back(rat_to_string(r));
    return arr;
}

inline Json x4_witness_to_json(const X4Witness& w) {
    return Json{{"kind", "x4"},
                {"d_sq", rat_to_string(w.d_sq)},
                {"tangents", rats_to_json(w.tangents)},
                {"points_a", points_to_json(w.a)},
                {"points_b", points_to_json(w.b)},
                {"verification",
                 Json{{"pairs_checked", w.verification.pairs_checked},
                      {"all_exact", w.verification.all_exact},
                      {"targets_sq", rats_to_json(w.verification.targets_sq)}}}};
}

inline Json x3_witness_to_json(const X3Witness& w) {
    return Json{{"kind", "x3"},
                {"tail", Json{{"c_sq", rat_to_string(w.tail.c_sq)},
                              {"q_sq", rat_to_string(w.tail.q_sq)}}},
                {"rho_sq", rat_to_string(w.rho_sq)},
                {"tangents", rats_to_json(w.tangents)},
                {"centers", points_to_json(w.centers)},
                {"points", points_to_json(w.points)},
                {"verification",
                 Json{{"pairs_checked", w.verification.pairs_checked},
                      {"all_exact", w.verification.all_exact},
                      {"targets_sq", rats_to_json(w.verification.targets_sq)}}}};
}

inline Json classify_to_json(const ClassifyReport& r) {
    const char* plan = r.witness_plan == ClassifyReport::WitnessPlan::none ? "none"
                       : r.witness_plan == ClassifyReport::WitnessPlan::x3 ? "x3"
                                                                           : "x4";
    return Json{
        {"verdict", r.verdict == ClassifyReport::Verdict::countable ? "countable" : "uncountable"},
        {"clause", r.clause},
        {"witness_plan", plan}};
}

inline Json cantor_interval_to_json(const CantorInterval& iv) {
    return Json{{"index", iv.index},
                {"depth", iv.depth},
                {"word", iv.word()},
                {"lo", rat_to_string(iv.lo)},
                {"hi", rat_to_string(iv.hi)}};
}

/// Sidecar mapping cantor_graph vertex ids to interval data / branch words.
inline Json cantor_sidecar_to_json(const CantorGraphResult& cg) {
    Json vertices = Json::array();
    for (int v = 0; v < cg.interval_count(); ++v) {
        Json j = cantor_interval_to_json(cg.intervals[v]);
        j["id"] = v;
        j["kind"] = "interval";
        vertices.push_back(std::move(j));
    }
    for (int b = 0; b < cg.branch_count(); ++b)
        vertices.push_back(Json{{"id", cg.interval_count() + b},
                                {"kind", "branch"},
                                {"word", cg.branch_words[b]}});
    return Json{{"depth", cg.depth},
                {"interval_count", cg.interval_count()},
                {"branch_count", cg.branch_count()},
                {"vertices", std::move(vertices)}};
}

inline Json hypercube_embedding_to_json(const HypercubeEmbedding& e) {
    Json words = Json::object();
    for (int w = 0; w < static_cast<int>(e.map.size()); ++w) {
        std::string key;
        for (int b = e.dim - 1; b >= 0; --b) key.push_back((w >> b) & 1 ? '1' : '0');
        words[key] = e.map[w];
    }
    return Json{{"dimension", e.dim},
                {"seed", e.seed},
                {"retries_used", e.retries_used},
                {"tangents", rats_to_json(e.tangents)},
                {"points", points_to_json(e.points)},
                {"word_map", std::move(words)},
                {"unit_graph", graph_to_json(e.unit_graph)}};
}

// ---- semialgebraic predicates ----------------------------------------------
//
// Atom: {"poly": {"<e1,e2,...>": "num/den", ...}, "rel": "<"|"="|">"}
// Tree: {"op": "and"|"or"|"not", "args": [...]}
// Set:  {"dim": n, "formula": <tree>}
// Family: {"n": n, "members": [<set>, ...]}

inline Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::object();
    for (const auto& [exps, coeff] : p.terms) {
        std::string key;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(exps[i]);
        }
        terms[key] = rat_to_string(coeff);
    }
    return terms;
}

inline Polynomial polynomial_from_json(const Json& j, int n_vars) {
    if (!j.is_object()) throw Error(Errc::parse_error, "polynomial must be an object");
    Polynomial p;
    p.n_vars = n_vars;
    for (const auto& [key, val] : j.items()) {
        std::vector<unsigned> exps;
        std::size_t pos = 0;
        while (pos <= key.size()) {
            std::size_t end = key.find(',', pos);
            if (end == std::string::npos) end = key.size();
            std::string part = key.substr(pos, end - pos);
            try {
                int e = std::stoi(part);
                if (e < 0) throw std::invalid_argument("negative");
                exps.push_back(static_cast<unsigned>(e));
            } catch (const std::exception&) {
                throw Error(Errc::parse_error, "bad exponent '" + part + "' in polynomial");
            }
            pos = end + 1;
        }
        if (static_cast<int>(exps.size()) != n_vars)
            throw Error(Errc::parse_error, "exponent vector '" + key + "' has wrong arity");
        p.add_term(std::move(exps), rat_from_json(val));
    }
    return p;
}

inline Json formula_to_json(const SemialgFormula& f) {
    switch (f.kind()) {
        case SemialgFormula::Kind::atom:
            return Json{{"poly", polynomial_to_json(f.get_atom().poly)},
                        {"rel", rel_name(f.get_atom().rel)}};
        case SemialgFormula::Kind::conj:
        case SemialgFormula::Kind::disj: {
            Json args = Json::array();
            for (const auto& c : f.children()) args.push_back(formula_to_json(c));
            return Json{{"op", f.kind() == SemialgFormula::Kind::conj ? "and" : "or"},
                        {"args", std::move(args)}};
        }
        case SemialgFormula::Kind::neg:
            return Json{{"op", "not"}, {"args", Json::array({formula_to_json(f.children()[0])})}};
    }
    throw Error(Errc::parse_error, "unknown formula kind");
}

inline SemialgFormula formula_from_json(const Json& j, int n_vars) {
    if (!j.is_object()) throw Error(Errc::parse_error, "formula must be an object");
    if (j.contains("poly")) {
        std::string rel = j.value("rel", "");
        Rel r;
        if (rel == "<")
            r = Rel::lt;
        else if (rel == "=")
            r = Rel::eq;
        else if (rel == ">")
            r = Rel::gt;
        else
            throw Error(Errc::parse_error, "atom relation must be one of <, =, >");
        return SemialgFormula::atom(polynomial_from_json(j.at("poly"), n_vars), r);
    }
    if (!j.contains("op") || !j.contains("args"))
        throw Error(Errc::parse_error, "formula node needs \"poly\" or \"op\"/\"args\"");
    std::string op = j.at("op").get<std::string>();
    std::vector<SemialgFormula> args;
    for (const auto& a : j.at("args")) args.push_back(formula_from_json(a, n_vars));
    if (op == "and") return SemialgFormula::conj(std::move(args));
    if (op == "or") return SemialgFormula::disj(std::move(args));
    if (op == "not") {
        if (args.size() != 1) throw Error(Errc::parse_error, "not takes exactly one argument");
        return SemialgFormula::neg(std::move(args[0]));
    }
    throw Error(Errc::parse_error, "unknown operator '" + op + "'");
}

inline Json semialg_set_to_json(const SemialgSet& s) {
    return Json{{"dim", s.dim}, {"formula", formula_to_json(s.formula)}};
}

inline SemialgSet semialg_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("formula"))
        throw Error(Errc::parse_error, "semialgebraic set needs \"dim\" and \"formula\"");
    int dim = j.at("dim").get<int>();
    if (dim < 1) throw Error(Errc::parse_error, "dimension must be >= 1");
    SemialgSet s{dim, formula_from_json(j.at("formula"), dim)};
    s.validate();
    return s;
}

inline Json sigma_family_to_json(const SigmaFamily& f) {
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back(semialg_set_to_json(m));
    return Json{{"n", f.n}, {"members", std::move(members)}};
}

inline SigmaFamily sigma_family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("members"))
        throw Error(Errc::parse_error, "family needs \"n\" and \"members\"");
    SigmaFamily f;
    f.n = j.at("n").get<int>();
    for (const auto& m : j.at("members")) f.members.push_back(semialg_set_from_json(m));
    f.validate();
    return f;
}

}  // namespace sigraph
