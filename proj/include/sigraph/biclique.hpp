#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sigraph/graph.hpp"
#include "sigraph/search.hpp"

namespace sigraph {

/// Complete bipartite subgraph witness: every left vertex adjacent to every
/// right vertex, parts disjoint.  Both parts ascending.
struct BicliqueWitness {
    std::vector<int> left;
    std::vector<int> right;
    SearchStats stats;
};

inline bool check_biclique(const Graph& g, const std::vector<int>& left,
                           const std::vector<int>& right) {
    for (int u : left) g.check_vertex(u);
    for (int v : right) g.check_vertex(v);
    for (int u : left)
        for (int v : right)
            if (u == v || !g.has_edge(u, v)) return false;
    return true;
}

/// Searches for K(m, t) inside g: backtracks over left parts in descending
/// degree order, maintaining the common neighborhood.  Deterministic; returns
/// the first witness found or nullopt after exhausting the space.
inline std::optional<BicliqueWitness> find_biclique(const Graph& g, int m, int t,
                                                    const SearchOptions& opts = {}) {
    if (m < 1 || t < 1)
        throw Error(Errc::invalid_argument, "biclique parts must be >= 1");
    int n = g.vertex_count();
    if (m + t > n) return std::nullopt;

    // Only vertices with enough neighbors can sit in the left part.
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= t) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    BudgetTicker ticker(opts);
    std::vector<int> chosen;
    std::optional<BicliqueWitness> found;

    // inter = common neighborhood of `chosen` (whole graph when empty).
    auto recurse = [&](auto&& self, std::size_t from, const std::vector<int>& inter) -> bool {
        ticker.tick("find_biclique");
        if (static_cast<int>(chosen.size()) == m) {
            BicliqueWitness w;
            w.left = chosen;
            std::sort(w.left.begin(), w.left.end());
            // `inter` excludes chosen vertices automatically (no loops), but a
            // later left vertex can appear in the common neighborhood of the
            // earlier ones; keep the parts disjoint.
            for (int v : inter) {
                if (static_cast<int>(w.right.size()) == t) break;
                if (!std::binary_search(w.left.begin(), w.left.end(), v)) w.right.push_back(v);
            }
            if (static_cast<int>(w.right.size()) < t) return false;
            found = std::move(w);
            return true;
        }
        for (std::size_t i = from; i < order.size(); ++i) {
            if (order.size() - i < static_cast<std::size_t>(m) - chosen.size()) break;
            ticker.tick("find_biclique");
            int v = order[i];
            std::vector<int> next;
            if (chosen.empty()) {
                next = g.neighbors(v);
            } else {
                const auto& nb = g.neighbors(v);
                std::set_intersection(inter.begin(), inter.end(), nb.begin(), nb.end(),
                                      std::back_inserter(next));
            }
            // Disjointness reserve: the right part may not reuse left vertices.
            int reserved = 0;
            for (int c : chosen)
                if (std::binary_search(next.begin(), next.end(), c)) ++reserved;
            if (static_cast<int>(next.size()) - reserved < t) continue;
            chosen.push_back(v);
            if (self(self, i + 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };

    std::vector<int> all;
    recurse(recurse, 0, all);
    if (found) found->stats.expansions = ticker.used();
    return found;
}

/// One embedding defect, reported with guest-side vertices.
struct EmbeddingViolation {
    enum class Kind { out_of_range, not_injective, missing_edge, extra_edge };
    Kind kind;
    int u = -1;
    int v = -1;

    std::string describe() const {
        switch (kind) {
            case Kind::out_of_range:
                return "image of " + std::to_string(u) + " out of range";
            case Kind::not_injective:
                return "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " share an image";
            case Kind::missing_edge:
                return "edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has no image edge";
            case Kind::extra_edge:
                return "non-edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} maps onto an edge";
        }
        return "?";
    }
};

struct EmbeddingReport {
    bool ok = false;
    std::vector<EmbeddingViolation> violations;
};

/// Checks that `map` (guest vertex -> host vertex) embeds `guest` into `host`
/// as a subgraph, or as an induced subgraph when `induced` is set.  Collects
/// every violation instead of stopping at the first.
inline EmbeddingReport verify_embedding(const Graph& host, const Graph& guest,
                                        const std::vector<int>& map, bool induced = false) {
    EmbeddingReport rep;
    int gn = guest.vertex_count();
    if (static_cast<int>(map.size()) != gn)
        throw Error(Errc::invalid_argument, "embedding map must list every guest vertex");
    using K = EmbeddingViolation::Kind;
    std::vector<bool> in_range(gn, false);
    for (int u = 0; u < gn; ++u) {
        if (map[u] < 0 || map[u] >= host.vertex_count())
            rep.violations.push_back({K::out_of_range, u, -1});
        else
            in_range[u] = true;
    }
    for (int u = 0; u < gn; ++u)
        for (int v = u + 1; v < gn; ++v) {
            if (!in_range[u] || !in_range[v]) continue;
            if (map[u] == map[v]) {
                rep.violations.push_back({K::not_injective, u, v});
                continue;
            }
            bool ge = guest.has_edge(u, v);
            bool he = host.has_edge(map[u], map[v]);
            if (ge && !he) rep.violations.push_back({K::missing_edge, u, v});
            if (!ge && he && induced) rep.violations.push_back({K::extra_edge, u, v});
        }
    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace sigraph
