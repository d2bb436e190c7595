#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "sigraph/graph.hpp"
#include "sigraph/search.hpp"

namespace sigraph {

/// Color lists per vertex; lists[v] is sorted and duplicate-free.
struct Listing {
    std::vector<std::vector<int>> lists;

    int size() const { return static_cast<int>(lists.size()); }

    void normalize() {
        for (auto& l : lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }

    int max_color() const {
        int m = -1;
        for (const auto& l : lists)
            for (int c : l) m = std::max(m, c);
        return m;
    }

    bool is_k_listing(int k) const {
        for (const auto& l : lists)
            if (static_cast<int>(l.size()) != k) return false;
        return true;
    }
};

inline void validate_listing(const Graph& g, const Listing& l) {
    if (l.size() != g.vertex_count())
        throw Error(Errc::listing_mismatch,
                    "listing covers " + std::to_string(l.size()) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
    for (int v = 0; v < l.size(); ++v)
        if (l.lists[v].empty())
            throw Error(Errc::listing_mismatch, "empty list at vertex " + std::to_string(v));
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

/// Exhaustive search for a proper coloring that picks each vertex's color
/// from its list.  Backtracking with forward checking; the next branch vertex
/// is always one with the fewest remaining colors (lowest index on ties) and
/// colors are tried in ascending order, so the returned coloring is
/// deterministic.  Returns nullopt exactly when no such coloring exists.
inline std::optional<std::vector<int>> list_colorable(const Graph& g, const Listing& listing,
                                                      const SearchOptions& opts = {}) {
    validate_listing(g, listing);
    int n = g.vertex_count();
    if (n == 0) return std::vector<int>{};

    std::vector<std::vector<int>> dom = listing.lists;
    for (auto& d : dom) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
    }
    std::vector<int> color(n, -1);
    BudgetTicker ticker(opts);

    auto pick_vertex = [&]() {
        int best = -1;
        std::size_t best_size = 0;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            if (best == -1 || dom[v].size() < best_size) {
                best = v;
                best_size = dom[v].size();
            }
        }
        return best;
    };

    // Forward checking: assigning v prunes its color from uncolored neighbor
    // domains; `undo` remembers the prunes for backtracking.
    auto recurse = [&](auto&& self) -> bool {
        int v = pick_vertex();
        if (v == -1) return true;
        std::vector<int> candidates = dom[v];
        for (int c : candidates) {
            ticker.tick("list_colorable");
            color[v] = c;
            std::vector<int> pruned;
            bool dead = false;
            for (int w : g.neighbors(v)) {
                if (color[w] != -1) {
                    if (color[w] == c) dead = true;  // can't happen after pruning, kept as guard
                } else {
                    auto it = std::lower_bound(dom[w].begin(), dom[w].end(), c);
                    if (it != dom[w].end() && *it == c) {
                        dom[w].erase(it);
                        pruned.push_back(w);
                        if (dom[w].empty()) dead = true;
                    }
                }
            }
            if (!dead && self(self)) return true;
            for (int w : pruned) {
                auto it = std::lower_bound(dom[w].begin(), dom[w].end(), c);
                dom[w].insert(it, c);
            }
            color[v] = -1;
        }
        return false;
    };

    if (recurse(recurse)) return color;
    return std::nullopt;
}

namespace detail {

/// Exhaustive k-colorability via saturation-guided backtracking.  New colors
/// are introduced one at a time (color symmetry cap), so the search space is
/// partition-shaped rather than k^n.
inline bool k_colorable(const Graph& g, int k, std::vector<int>& out, BudgetTicker& ticker) {
    int n = g.vertex_count();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> color(n, -1);

    auto pick_vertex = [&]() {
        int best = -1, best_sat = -1, best_deg = -1;
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::fill(seen.begin(), seen.end(), false);
            int sat = 0;
            for (int w : g.neighbors(v))
                if (color[w] != -1 && !seen[color[w]]) {
                    seen[color[w]] = true;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    };

    auto recurse = [&](auto&& self, int used) -> bool {
        int v = pick_vertex();
        if (v == -1) return true;
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (int w : g.neighbors(v))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            ticker.tick("chromatic_number");
            color[v] = c;
            if (self(self, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };

    if (!recurse(recurse, 0)) return false;
    out = color;
    return true;
}

/// Greedy clique along descending degree: a valid lower bound for chi.
inline int greedy_clique_bound(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace detail

struct ChromaticResult {
    int value = 0;
    std::vector<int> coloring;
    SearchStats stats;
};

/// Exact chromatic number: test k-colorability for ascending k starting at a
/// greedy clique lower bound.
inline ChromaticResult chromatic_number(const Graph& g, const SearchOptions& opts = {}) {
    ChromaticResult res;
    if (g.vertex_count() == 0) return res;
    BudgetTicker ticker(opts);
    int lb = std::max(1, detail::greedy_clique_bound(g));
    for (int k = lb;; ++k) {
        std::vector<int> coloring;
        if (detail::k_colorable(g, k, coloring, ticker)) {
            res.value = k;
            res.coloring = std::move(coloring);
            break;
        }
    }
    res.stats.expansions = ticker.used();
    return res;
}

struct OrderingWitness {
    std::vector<int> order;         // left-to-right vertex ordering
    std::vector<int> back_degrees;  // back_degrees[i] = neighbors of order[i] among order[0..i-1]
};

struct ColoringNumberResult {
    int value = 0;  // 1 + max back degree (0 for the empty graph)
    OrderingWitness witness;
};

/// Coloring number col(g) via the smallest-last ordering: repeatedly delete a
/// minimum-degree vertex (lowest index on ties); the reverse deletion order
/// minimizes the maximum back degree, which equals the degeneracy.
inline ColoringNumberResult coloring_number_witness(const Graph& g) {
    int n = g.vertex_count();
    ColoringNumberResult res;
    if (n == 0) return res;

    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> removal;
    removal.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        removal.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }

    auto& order = res.witness.order;
    order.assign(removal.rbegin(), removal.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    res.witness.back_degrees.resize(n);
    int max_back = 0;
    for (int i = 0; i < n; ++i) {
        int b = 0;
        for (int w : g.neighbors(order[i]))
            if (pos[w] < i) ++b;
        res.witness.back_degrees[i] = b;
        max_back = std::max(max_back, b);
    }
    res.value = 1 + max_back;
    return res;
}

/// Lifts a listing on an induced subgraph to the whole host graph: vertices
/// of `sub` keep their lists, every other vertex receives k colors never seen
/// elsewhere.  Fresh lists are private, so the extension is list-colorable
/// exactly when the original was.
inline Listing extend_listing_fresh(const Graph& host, const std::vector<int>& sub,
                                    const Listing& sub_listing, int k) {
    if (k < 1) throw Error(Errc::invalid_argument, "list size k must be >= 1");
    if (static_cast<int>(sub.size()) != sub_listing.size())
        throw Error(Errc::listing_mismatch, "sub listing does not match sub vertex count");
    int n = host.vertex_count();
    std::vector<int> where(n, -1);
    for (std::size_t i = 0; i < sub.size(); ++i) {
        host.check_vertex(sub[i]);
        if (where[sub[i]] != -1)
            throw Error(Errc::duplicate_vertex, "vertex " + std::to_string(sub[i]) + " repeated");
        where[sub[i]] = static_cast<int>(i);
        if (sub_listing.lists[i].empty())
            throw Error(Errc::listing_mismatch, "empty list at sub vertex " + std::to_string(i));
    }
    int fresh = sub_listing.max_color() + 1;
    Listing full;
    full.lists.resize(n);
    for (int v = 0; v < n; ++v) {
        if (where[v] != -1) {
            full.lists[v] = sub_listing.lists[where[v]];
        } else {
            full.lists[v].resize(k);
            std::iota(full.lists[v].begin(), full.lists[v].end(), fresh);
            fresh += k;
        }
    }
    full.normalize();
    return full;
}

}  // namespace sigraph
