#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "sigraph/coloring.hpp"
#include "sigraph/families.hpp"
#include "sigraph/graph.hpp"
#include "sigraph/rational.hpp"
#include "sigraph/search.hpp"

namespace sigraph {

/// Adversary listing on K(m, C(m^2, m)): the universe has m blocks of m
/// colors, left vertex i gets block i, and the right part runs through every
/// m-subset of the universe.  Any proper coloring of the left part picks a
/// transversal of the blocks, and the right vertex carrying exactly that
/// m-subset is stuck, so the listing is never colorable.
struct AdversaryListing {
    Graph graph;
    Listing listing;
    int m = 0;
    long long right_count = 0;
};

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i;
    }
    return r;
}

inline AdversaryListing kmn_adversary_listing(int m, long long max_right = 200'000) {
    if (m < 1) throw Error(Errc::invalid_argument, "m must be >= 1");
    Int lambda = binomial(m * m, m);
    if (lambda > max_right)
        throw Error(Errc::size_overflow, "adversary for m = " + std::to_string(m) + " needs " +
                                             lambda.str() + " right vertices");
    AdversaryListing adv;
    adv.m = m;
    adv.right_count = lambda.convert_to<long long>();
    adv.graph = complete_bipartite(m, static_cast<int>(adv.right_count));
    adv.listing.lists.resize(m + adv.right_count);
    for (int i = 0; i < m; ++i) {
        adv.listing.lists[i].resize(m);
        for (int c = 0; c < m; ++c) adv.listing.lists[i][c] = i * m + c;
    }
    // Right vertices: m-subsets of {0..m^2-1} in lexicographic order.
    std::vector<int> subset(m);
    for (int c = 0; c < m; ++c) subset[c] = c;
    int idx = m;
    while (true) {
        adv.listing.lists[idx++] = subset;
        int i = m - 1;
        while (i >= 0 && subset[i] == m * m - m + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
    }
    return adv;
}

struct DefeatCertificate {
    Listing listing;        // k-listing on the whole graph with no proper coloring
    bool exhaustive = true; // solver proved uncolorability by exhausting the space
    SearchStats stats;
};

namespace detail {

/// Largest induced subgraph with min degree >= k, as a sorted vertex list.
inline std::vector<int> k_core(const Graph& g, int k) {
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && deg[v] < k) {
                gone[v] = true;
                changed = true;
                for (int w : g.neighbors(v))
                    if (!gone[w]) --deg[w];
            }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) out.push_back(v);
    return out;
}

/// Searches one candidate subgraph for an uncolorable k-listing by covering
/// its vertices with connected color classes (each class = one color's set of
/// holders).  Classes are chosen for the lowest not-yet-full vertex in
/// ascending mask order, which walks every class multiset exactly once in a
/// canonical order.  Whenever some vertices reach their full k classes, the
/// exhaustive solver adjudicates the listing induced on them; an uncolorable
/// verdict is a win and is returned as lists over the subgraph's vertices.
/// Subtrees die early when a partial proper assignment of the colors picked
/// so far leaves every unassigned vertex peelable on future slots alone:
/// such an assignment extends to a proper coloring of every completion.
class CoverSearch {
public:
    CoverSearch(const Graph& h, int k, BudgetTicker& ticker, const SearchOptions& solver_opts)
        : h_(h), k_(k), ticker_(ticker), solver_opts_(solver_opts) {}

    std::optional<std::pair<std::vector<int>, Listing>> run() {
        int n = h_.vertex_count();
        if (n > 63) throw Error(Errc::size_overflow, "cover search limited to 63 vertices");
        nbr_mask_.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : h_.neighbors(v)) nbr_mask_[v] |= 1ULL << w;
        cand_by_anchor_.assign(n, {});
        for (std::uint64_t mask = 3; mask < (1ULL << n); ++mask) {
            ticker_.tick("find_defeating_listing");
            if (std::popcount(mask) < 2 || !connected(mask)) continue;
            cand_by_anchor_[std::countr_zero(mask)].push_back(mask);
        }
        cap_.assign(n, k_);
        picks_.clear();
        return dfs(0, 0) ? std::move(found_) : std::nullopt;
    }

private:
    bool connected(std::uint64_t mask) const {
        std::uint64_t seen = mask & (~mask + 1);  // lowest set bit
        while (true) {
            std::uint64_t grow = seen;
            std::uint64_t rest = mask & ~seen;
            for (std::uint64_t m = rest; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (nbr_mask_[v] & seen) grow |= 1ULL << v;
            }
            if (grow == seen) break;
            seen = grow;
        }
        return seen == mask;
    }

    int lowest_incomplete() const {
        for (int v = 0; v < h_.vertex_count(); ++v)
            if (cap_[v] > 0) return v;
        return -1;
    }

    // A still-incomplete vertex all of whose neighbors are complete can never
    // join another connected class of size >= 2.
    bool viable() const {
        for (int v = 0; v < h_.vertex_count(); ++v) {
            if (cap_[v] == 0) continue;
            bool has_partner = false;
            for (std::uint64_t m = nbr_mask_[v]; m; m &= m - 1)
                if (cap_[std::countr_zero(m)] > 0) {
                    has_partner = true;
                    break;
                }
            if (!has_partner) return false;
        }
        return true;
    }

    /// Peel test: true when the vertices with phi == -1 can be deleted one by
    /// one, each having fewer uncommitted neighbors left than future slots.
    bool peels(const std::vector<int>& phi) const {
        int n = h_.vertex_count();
        std::vector<int> deg(n, 0);
        std::vector<char> in(n, 0);
        int remaining = 0;
        for (int v = 0; v < n; ++v)
            if (phi[v] == -1) {
                in[v] = 1;
                ++remaining;
            }
        for (int v = 0; v < n; ++v)
            if (in[v])
                for (int w : h_.neighbors(v)) deg[v] += in[w];
        bool changed = true;
        while (changed && remaining > 0) {
            changed = false;
            for (int v = 0; v < n; ++v)
                if (in[v] && deg[v] < cap_[v]) {
                    in[v] = 0;
                    --remaining;
                    changed = true;
                    for (int w : h_.neighbors(v))
                        if (in[w]) --deg[w];
                }
        }
        return remaining == 0;
    }

    /// Sound prune: hunt for a proper partial assignment of the colors picked
    /// so far whose unassigned remainder peels off on future slots.  Every
    /// class added below this node brings one fresh color and can only touch
    /// vertices with open caps, so the assignment extends greedily to a
    /// proper coloring of any completed listing: nothing uncolorable lies in
    /// this subtree.  Vertices with no open cap have final lists and must be
    /// assigned.  The hunt is step-capped; missing a witness just means no
    /// prune.
    bool every_completion_colorable() {
        ticker_.tick("find_defeating_listing");
        int n = h_.vertex_count();
        std::vector<std::vector<int>> cur(n);
        for (std::size_t p = 0; p < picks_.size(); ++p)
            for (std::uint64_t m = picks_[p]; m; m &= m - 1)
                cur[std::countr_zero(m)].push_back(static_cast<int>(p));
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return cap_[a] < cap_[b]; });
        std::vector<int> phi(n, -1);
        int steps = 0;
        auto go = [&](auto&& self, int idx) -> bool {
            if (++steps > 400) return false;
            if (idx == n) return peels(phi);
            int v = order[idx];
            for (int c : cur[v]) {
                bool clash = false;
                for (int w : h_.neighbors(v))
                    if (phi[w] == c) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                phi[v] = c;
                if (self(self, idx + 1)) return true;
                phi[v] = -1;
            }
            return cap_[v] > 0 && self(self, idx + 1);
        };
        return go(go, 0);
    }

    /// Solver check on the vertices whose lists are already final.
    bool adjudicate_completed() {
        std::vector<int> done;
        for (int v = 0; v < h_.vertex_count(); ++v)
            if (cap_[v] == 0) done.push_back(v);
        if (done.empty()) return false;
        Listing sub;
        sub.lists.resize(done.size());
        for (std::size_t i = 0; i < done.size(); ++i)
            for (std::size_t p = 0; p < picks_.size(); ++p)
                if (picks_[p] & (1ULL << done[i])) sub.lists[i].push_back(static_cast<int>(p));
        InducedSubgraph is = induced_subgraph(h_, done);
        if (list_colorable(is.graph, sub, solver_opts_)) return false;
        found_ = std::make_pair(std::move(is.vertices), std::move(sub));
        return true;
    }

    bool dfs(int last_anchor, std::size_t from) {
        int anchor = lowest_incomplete();
        if (anchor == -1) return false;  // full cover already adjudicated colorable
        std::size_t start = (anchor == last_anchor) ? from : 0;
        const auto& cands = cand_by_anchor_[anchor];
        for (std::size_t i = start; i < cands.size(); ++i) {
            std::uint64_t mask = cands[i];
            bool usable = true;
            for (std::uint64_t m = mask; m; m &= m - 1)
                if (cap_[std::countr_zero(m)] == 0) {
                    usable = false;
                    break;
                }
            if (!usable) continue;
            ticker_.tick("find_defeating_listing");
            bool completed_any = false;
            for (std::uint64_t m = mask; m; m &= m - 1)
                if (--cap_[std::countr_zero(m)] == 0) completed_any = true;
            picks_.push_back(mask);
            bool win = completed_any && adjudicate_completed();
            if (!win && viable() && !every_completion_colorable() && dfs(anchor, i)) win = true;
            if (win) return true;
            picks_.pop_back();
            for (std::uint64_t m = mask; m; m &= m - 1) ++cap_[std::countr_zero(m)];
        }
        return false;
    }

    const Graph& h_;
    int k_;
    BudgetTicker& ticker_;
    SearchOptions solver_opts_;
    std::vector<std::uint64_t> nbr_mask_;
    std::vector<std::vector<std::uint64_t>> cand_by_anchor_;
    std::vector<int> cap_;
    std::vector<std::uint64_t> picks_;
    std::optional<std::pair<std::vector<int>, Listing>> found_;
};

}  // namespace detail

/// Exhaustive search for a k-listing with no proper coloring.  Any such
/// listing survives three colorability-preserving reductions: restrict to an
/// induced subgraph of min degree >= k, make every color class connected, and
/// drop colors held by a single vertex.  The search therefore enumerates
/// connected induced subgraphs of the k-core in canonical (size, lex) order
/// and, inside each, covers of the vertices by connected classes; the
/// exhaustive solver has the final word on every candidate.  A returned
/// certificate is re-verified on the full graph.  Returns nullopt only after
/// exhausting the whole space, so "none" certifies that every k-listing of g
/// admits a proper coloring.
inline std::optional<DefeatCertificate> find_defeating_listing(const Graph& g, int k,
                                                               const SearchOptions& opts = {}) {
    if (k < 1) throw Error(Errc::invalid_argument, "list size k must be >= 1");
    BudgetTicker ticker(opts);
    std::vector<int> core = detail::k_core(g, k);
    std::optional<DefeatCertificate> out;

    // Subsets of the core, size ascending then lexicographic.
    std::vector<int> comb;
    auto try_subset = [&](const std::vector<int>& subset_idx) -> bool {
        ticker.tick("find_defeating_listing");
        std::vector<int> vs;
        for (int i : subset_idx) vs.push_back(core[i]);
        InducedSubgraph h = induced_subgraph(g, vs);
        int hn = h.graph.vertex_count();
        for (int v = 0; v < hn; ++v)
            if (h.graph.degree(v) < k) return false;
        if (connected_components(h.graph).size() != 1) return false;
        detail::CoverSearch cover(h.graph, k, ticker, opts);
        auto hit = cover.run();
        if (!hit) return false;
        // Map the defeated sub-listing back to g and pad with fresh lists.
        std::vector<int> orig;
        for (int v : hit->first) orig.push_back(h.vertices[v]);
        Listing full = extend_listing_fresh(g, orig, hit->second, k);
        if (list_colorable(g, full, opts))
            throw Error(Errc::invalid_argument, "internal: certificate failed re-verification");
        DefeatCertificate cert;
        cert.listing = std::move(full);
        cert.exhaustive = true;
        cert.stats.expansions = ticker.used();
        out = std::move(cert);
        return true;
    };

    int cn = static_cast<int>(core.size());
    for (int size = k + 1; size <= cn; ++size) {
        comb.resize(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            if (try_subset(comb)) return out;
            int i = size - 1;
            while (i >= 0 && comb[i] == cn - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

/// Exact list-chromatic number by ascending search: the smallest k whose
/// defeating-listing search comes up empty.  Stops at k_max; certificates for
/// each defeated k are kept for reporting.
struct ListChromaticReport {
    std::optional<int> value;  // empty means chi_ell > k_max
    int k_max = 0;
    std::vector<DefeatCertificate> certificates;  // for k = 1, 2, ... while defeated
    SearchStats stats;
};

inline ListChromaticReport list_chromatic_exact(const Graph& g, int k_max,
                                                const SearchOptions& opts = {}) {
    if (k_max < 0) throw Error(Errc::invalid_argument, "k_max must be >= 0");
    ListChromaticReport rep;
    rep.k_max = k_max;
    if (g.vertex_count() == 0) {
        rep.value = 0;
        return rep;
    }
    for (int k = 1; k <= k_max; ++k) {
        auto cert = find_defeating_listing(g, k, opts);
        rep.stats.expansions += cert ? cert->stats.expansions : 0;
        if (!cert) {
            rep.value = k;
            return rep;
        }
        rep.certificates.push_back(std::move(*cert));
    }
    return rep;
}

}  // namespace sigraph
