#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigraph/io.hpp"

namespace sg = sigraph;
using sg::Json;

namespace {

struct Output {
    std::string format = "text";
    std::string path = "-";

    void write(const std::string& body) const {
        if (path == "-" || path.empty()) {
            std::cout << body;
            if (!body.empty() && body.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream os(path);
            if (!os) throw sg::Error(sg::Errc::parse_error, "cannot open output file " + path);
            os << body;
            if (!body.empty() && body.back() != '\n') os << "\n";
        }
    }

    /// Text body in text mode; {"command", "inputs", "result", "stats"}
    /// envelope in json mode.
    void emit(const std::string& command, const Json& inputs, const Json& result,
              const Json& stats, const std::string& text_body) const {
        if (format == "json") {
            Json envelope{
                {"command", command}, {"inputs", inputs}, {"result", result}, {"stats", stats}};
            write(envelope.dump(2));
        } else {
            write(text_body);
        }
    }
};

sg::Graph load_graph(const std::string& path) {
    if (path == "-" || path.empty()) return sg::read_graph_text(std::cin);
    std::ifstream is(path);
    if (!is) throw sg::Error(sg::Errc::parse_error, "cannot open graph file " + path);
    return sg::read_graph_text(is);
}

Json load_json(const std::string& path) {
    try {
        if (path == "-" || path.empty()) return Json::parse(std::cin);
        std::ifstream is(path);
        if (!is) throw sg::Error(sg::Errc::parse_error, "cannot open file " + path);
        return Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw sg::Error(sg::Errc::parse_error, std::string("malformed JSON input: ") + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw sg::Error(sg::Errc::parse_error, "bad integer '" + part + "' in list");
        }
    }
    return out;
}

std::string listing_to_text(const sg::Listing& l) {
    std::ostringstream os;
    for (int v = 0; v < l.size(); ++v) {
        os << v << ":";
        for (int c : l.lists[v]) os << " " << c;
        os << "\n";
    }
    return os.str();
}

std::string ints_to_text(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for list coloring, bicliques, Cantor systems and distance graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::uint64_t budget = sg::kDefaultBudget;
    std::uint64_t seed = sg::kDefaultSeed;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("-o,--output", out.path, "output file, - for stdout")->capture_default_str();
    app.add_option("--budget", budget, "search budget in expansions")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized constructions")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family");
    gen->require_subcommand(1);
    int kmn_m = 2, kmn_n = 6;
    auto* gen_kmn = gen->add_subcommand("kmn", "complete bipartite K(m,n)");
    gen_kmn->add_option("--m", kmn_m)->required();
    gen_kmn->add_option("--n", kmn_n)->required();
    int h_levels = 3;
    std::string h_sizes = "2,2,2";
    auto* gen_h = gen->add_subcommand("h", "truncated tower graph");
    gen_h->add_option("--levels", h_levels)->required();
    gen_h->add_option("--sizes", h_sizes, "comma-separated block sizes")->required();
    int cantor_d = 4;
    std::string sidecar_path;
    auto* gen_cantor = gen->add_subcommand("cantor", "Cantor interval/branch incidence graph");
    gen_cantor->add_option("--d", cantor_d)->required();
    gen_cantor->add_option("--sidecar", sidecar_path, "write vertex metadata JSON here");
    int cube_d = 4;
    auto* gen_cube = gen->add_subcommand("cube", "unit-distance hypercube embedding in Q^2");
    gen_cube->add_option("--d", cube_d)->required();

    // solvers
    std::string graph_path = "-";
    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    chi->add_option("file", graph_path, "graph file, - for stdin");
    auto* col = app.add_subcommand("col", "coloring number with smallest-last witness");
    col->add_option("file", graph_path);
    int kmax = 4;
    auto* chil = app.add_subcommand("chil", "exact list-chromatic number up to --kmax");
    chil->add_option("--kmax", kmax)->required();
    chil->add_option("file", graph_path);
    int defeat_k = 2;
    auto* defeat = app.add_subcommand("defeat", "search for an uncolorable k-listing");
    defeat->add_option("--k", defeat_k)->required();
    defeat->add_option("file", graph_path);
    auto* defeat_check =
        app.add_subcommand("defeat-check", "run the solver on a {graph, listing} bundle");
    defeat_check->add_option("file", graph_path);
    int bic_m = 2, bic_t = 2;
    auto* biclique = app.add_subcommand("biclique", "search for a K(m,t) subgraph");
    biclique->add_option("--m", bic_m)->required();
    biclique->add_option("--t", bic_t)->required();
    biclique->add_option("file", graph_path);
    int adv_m = 2;
    auto* adversary = app.add_subcommand("adversary", "K(m, C(m^2,m)) with its defeating listing");
    adversary->add_option("--m", adv_m)->required();

    // geometry
    std::string dspec_str;
    int cls_n = 3;
    auto* classify = app.add_subcommand("classify", "countability of the list-chromatic number");
    classify->add_option("--n", cls_n)->required();
    classify->add_option("--dspec", dspec_str)->required();
    auto* witness = app.add_subcommand("witness", "exact biclique witnesses in R^3 / R^4");
    witness->require_subcommand(1);
    std::string x3_dspec = "tail:1,4";
    std::string rho_sq_str = "1/4";
    int x3_centers = 5, x3_points = 20;
    auto* witness_x3 = witness->add_subcommand("x3", "spheres through a common circle");
    witness_x3->add_option("--dspec", x3_dspec, "distance spec with increasing tail");
    witness_x3->add_option("--rho-sq", rho_sq_str, "squared radius of the common circle");
    witness_x3->add_option("--centers", x3_centers);
    witness_x3->add_option("--points", x3_points);
    std::string d_sq_str = "2";
    int x4_k = 20;
    auto* witness_x4 = witness->add_subcommand("x4", "orthogonal circles");
    witness_x4->add_option("--d-sq", d_sq_str, "target squared distance");
    witness_x4->add_option("--k", x4_k, "points per side");
    long long interval_j = 2;
    auto* cantor_interval = app.add_subcommand("cantor-interval", "exact interval by index");
    cantor_interval->add_option("--j", interval_j)->required();

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };
    sg::SearchOptions opts{budget};

    try {
        if (gen->parsed()) {
            if (gen_kmn->parsed()) {
                sg::Graph g = sg::complete_bipartite(kmn_m, kmn_n);
                out.emit("gen kmn", Json{{"m", kmn_m}, {"n", kmn_n}}, sg::graph_to_json(g),
                         Json{{"elapsed_ms", elapsed_ms()}}, sg::graph_to_text(g));
            } else if (gen_h->parsed()) {
                sg::HTruncation h = sg::h_truncation(h_levels, parse_int_list(h_sizes));
                out.emit("gen h", Json{{"levels", h_levels}, {"sizes", h_sizes}},
                         sg::graph_to_json(h.graph), Json{{"elapsed_ms", elapsed_ms()}},
                         sg::graph_to_text(h.graph));
            } else if (gen_cantor->parsed()) {
                sg::CantorGraphResult cg = sg::cantor_graph(cantor_d);
                if (!sidecar_path.empty()) {
                    std::ofstream os(sidecar_path);
                    if (!os)
                        throw sg::Error(sg::Errc::parse_error,
                                        "cannot open sidecar file " + sidecar_path);
                    os << sg::cantor_sidecar_to_json(cg).dump(2) << "\n";
                }
                out.emit("gen cantor", Json{{"d", cantor_d}},
                         Json{{"graph", sg::graph_to_json(cg.graph)},
                              {"sidecar", sg::cantor_sidecar_to_json(cg)}},
                         Json{{"elapsed_ms", elapsed_ms()}}, sg::graph_to_text(cg.graph));
            } else if (gen_cube->parsed()) {
                sg::HypercubeEmbedding emb = sg::hypercube_embedding(cube_d, seed);
                out.emit("gen cube", Json{{"d", cube_d}, {"seed", seed}},
                         sg::hypercube_embedding_to_json(emb),
                         Json{{"elapsed_ms", elapsed_ms()}, {"retries_used", emb.retries_used}},
                         sg::graph_to_text(emb.unit_graph));
            }
        } else if (chi->parsed()) {
            sg::Graph g = load_graph(graph_path);
            sg::ChromaticResult r = sg::chromatic_number(g, opts);
            out.emit("chi", Json{{"file", graph_path}},
                     Json{{"chi", r.value}, {"coloring", r.coloring}},
                     Json{{"elapsed_ms", elapsed_ms()}, {"expansions", r.stats.expansions}},
                     "chi = " + std::to_string(r.value) + "\ncoloring: " +
                         ints_to_text(r.coloring));
        } else if (col->parsed()) {
            sg::Graph g = load_graph(graph_path);
            sg::ColoringNumberResult r = sg::coloring_number_witness(g);
            out.emit("col", Json{{"file", graph_path}},
                     Json{{"col", r.value}, {"witness", sg::ordering_witness_to_json(r.witness)}},
                     Json{{"elapsed_ms", elapsed_ms()}},
                     "col = " + std::to_string(r.value) + "\norder: " +
                         ints_to_text(r.witness.order) + "\nback_degrees: " +
                         ints_to_text(r.witness.back_degrees));
        } else if (chil->parsed()) {
            sg::Graph g = load_graph(graph_path);
            sg::ListChromaticReport r = sg::list_chromatic_exact(g, kmax, opts);
            Json certificates = Json::array();
            for (const auto& c : r.certificates)
                certificates.push_back(sg::defeat_certificate_to_json(c));
            Json result{{"k_max", r.k_max},
                        {"determined", r.value.has_value()},
                        {"certificates", std::move(certificates)}};
            std::string text;
            if (r.value) {
                result["chi_ell"] = *r.value;
                text = "chi_ell = " + std::to_string(*r.value);
            } else {
                result["chi_ell"] = nullptr;
                text = "chi_ell > " + std::to_string(r.k_max) +
                       " (every k up to k_max is defeated)";
            }
            out.emit("chil", Json{{"file", graph_path}, {"k_max", kmax}}, result,
                     Json{{"elapsed_ms", elapsed_ms()}, {"expansions", r.stats.expansions}},
                     text);
        } else if (defeat->parsed()) {
            sg::Graph g = load_graph(graph_path);
            auto cert = sg::find_defeating_listing(g, defeat_k, opts);
            if (cert) {
                out.emit("defeat", Json{{"file", graph_path}, {"k", defeat_k}},
                         Json{{"found", true},
                              {"certificate", sg::defeat_certificate_to_json(*cert)}},
                         Json{{"elapsed_ms", elapsed_ms()},
                              {"expansions", cert->stats.expansions}},
                         "defeating " + std::to_string(defeat_k) + "-listing found:\n" +
                             listing_to_text(cert->listing));
            } else {
                out.emit("defeat", Json{{"file", graph_path}, {"k", defeat_k}},
                         Json{{"found", false}}, Json{{"elapsed_ms", elapsed_ms()}},
                         "no defeating " + std::to_string(defeat_k) +
                             "-listing exists (chi_ell <= " + std::to_string(defeat_k) + ")");
            }
        } else if (defeat_check->parsed()) {
            Json bundle = load_json(graph_path);
            if (bundle.contains("result")) bundle = bundle.at("result");
            if (bundle.contains("certificate")) bundle = bundle.at("certificate");
            if (!bundle.contains("graph") && bundle.contains("listing")) {
                // bare certificate: listing only, graph must come separately
                throw sg::Error(sg::Errc::parse_error, "bundle is missing \"graph\"");
            }
            sg::Graph g = sg::graph_from_json(bundle.at("graph"));
            sg::Listing l = sg::listing_from_json(bundle.at("listing"));
            auto coloring = sg::list_colorable(g, l, opts);
            if (coloring) {
                out.emit("defeat-check", Json{{"file", graph_path}},
                         Json{{"colorable", true}, {"coloring", *coloring}},
                         Json{{"elapsed_ms", elapsed_ms()}},
                         "proper coloring found: " + ints_to_text(*coloring));
            } else {
                out.emit("defeat-check", Json{{"file", graph_path}}, Json{{"colorable", false}},
                         Json{{"elapsed_ms", elapsed_ms()}}, "no proper coloring exists");
            }
        } else if (biclique->parsed()) {
            sg::Graph g = load_graph(graph_path);
            auto w = sg::find_biclique(g, bic_m, bic_t, opts);
            std::string name = "K(" + std::to_string(bic_m) + "," + std::to_string(bic_t) + ")";
            if (w) {
                out.emit("biclique", Json{{"file", graph_path}, {"m", bic_m}, {"t", bic_t}},
                         Json{{"found", true}, {"witness", sg::biclique_to_json(*w)}},
                         Json{{"elapsed_ms", elapsed_ms()}, {"expansions", w->stats.expansions}},
                         name + " found\nleft: " + ints_to_text(w->left) +
                             "\nright: " + ints_to_text(w->right));
            } else {
                out.emit("biclique", Json{{"file", graph_path}, {"m", bic_m}, {"t", bic_t}},
                         Json{{"found", false}}, Json{{"elapsed_ms", elapsed_ms()}},
                         "no " + name + " subgraph (exhaustive)");
            }
        } else if (adversary->parsed()) {
            sg::AdversaryListing adv = sg::kmn_adversary_listing(adv_m);
            // Always the raw bundle so the output can be piped into defeat-check.
            out.write(sg::adversary_to_json(adv).dump(2));
        } else if (classify->parsed()) {
            sg::DSpec d = sg::parse_dspec(dspec_str);
            sg::ClassifyReport r = sg::classify_distance_graph(cls_n, d);
            Json rj = sg::classify_to_json(r);
            out.emit("classify", Json{{"n", cls_n}, {"dspec", dspec_str}}, rj,
                     Json{{"elapsed_ms", elapsed_ms()}},
                     "verdict: " + rj["verdict"].get<std::string>() + "\nclause: " + r.clause +
                         "\nwitness_plan: " + rj["witness_plan"].get<std::string>());
        } else if (witness->parsed()) {
            if (witness_x3->parsed()) {
                sg::DSpec d = sg::parse_dspec(x3_dspec);
                sg::X3Witness w =
                    sg::witness_x3(d, sg::parse_rat(rho_sq_str), x3_centers, x3_points);
                std::ostringstream text;
                text << "x3 witness: " << x3_centers << " sphere centers x " << x3_points
                     << " circle points, " << w.verification.pairs_checked
                     << " incidences, all exact: "
                     << (w.verification.all_exact ? "yes" : "NO");
                out.emit("witness x3",
                         Json{{"dspec", x3_dspec},
                              {"rho_sq", rho_sq_str},
                              {"centers", x3_centers},
                              {"points", x3_points}},
                         sg::x3_witness_to_json(w), Json{{"elapsed_ms", elapsed_ms()}},
                         text.str());
            } else if (witness_x4->parsed()) {
                sg::X4Witness w = sg::witness_x4(sg::parse_rat(d_sq_str), x4_k);
                std::ostringstream text;
                text << "x4 witness: " << x4_k << " x " << x4_k << " points, "
                     << w.verification.pairs_checked << " cross pairs at squared distance "
                     << sg::rat_to_short_string(w.d_sq)
                     << ", all exact: " << (w.verification.all_exact ? "yes" : "NO");
                out.emit("witness x4", Json{{"d_sq", d_sq_str}, {"k", x4_k}},
                         sg::x4_witness_to_json(w), Json{{"elapsed_ms", elapsed_ms()}},
                         text.str());
            }
        } else if (cantor_interval->parsed()) {
            sg::CantorInterval iv = sg::cantor_interval(interval_j);
            out.emit("cantor-interval", Json{{"j", interval_j}}, sg::cantor_interval_to_json(iv),
                     Json{{"elapsed_ms", elapsed_ms()}},
                     "[" + sg::rat_to_short_string(iv.lo) + ", " + sg::rat_to_short_string(iv.hi) +
                         "]");
        }
    } catch (const sg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == sg::Errc::search_budget_exceeded ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
