#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigraph/biclique.hpp"
#include "sigraph/graph.hpp"
#include "sigraph/rational.hpp"

namespace sigraph {

/// K(m, n): left part 0..m-1, right part m..m+n-1, all cross edges.
inline Graph complete_bipartite(int m, int n) {
    if (m < 0 || n < 0) throw Error(Errc::invalid_argument, "part sizes must be >= 0");
    if (static_cast<long long>(m) * n > 100'000'000LL)
        throw Error(Errc::size_overflow, "complete bipartite graph too large");
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

/// Finite tower truncation: chain vertices a_0..a_{k-1} followed by blocks
/// B_0..B_{k-1} of the given sizes; a_i is joined to every vertex of B_j for
/// j >= i, so block neighborhoods are nested along the chain.
struct HTruncation {
    Graph graph;
    int levels = 0;
    std::vector<int> block_start;  // first vertex id of each block
    std::vector<int> block_size;
};

inline HTruncation h_truncation(int levels, const std::vector<int>& sizes) {
    if (levels < 1) throw Error(Errc::invalid_argument, "levels must be >= 1");
    if (static_cast<int>(sizes.size()) != levels)
        throw Error(Errc::invalid_argument, "need one block size per level");
    long long total = levels;
    for (int s : sizes) {
        if (s < 1) throw Error(Errc::invalid_argument, "block sizes must be >= 1");
        total += s;
    }
    if (total > 1'000'000)
        throw Error(Errc::size_overflow, "truncated tower too large");
    HTruncation h;
    h.levels = levels;
    h.graph = Graph(static_cast<int>(total));
    int next = levels;
    for (int i = 0; i < levels; ++i) {
        h.block_start.push_back(next);
        h.block_size.push_back(sizes[i]);
        for (int b = 0; b < sizes[i]; ++b) {
            for (int a = 0; a <= i; ++a) h.graph.add_edge(a, next);
            ++next;
        }
    }
    return h;
}

/// J-th interval of the standard middle-thirds system, enumerated
/// breadth-first from j = 2: depth i satisfies 2^i < j <= 2^{i+1} and the
/// binary digits of j - 2^i - 1 (most significant first) pick the left (0)
/// or right (1) third at each descent.
struct CantorInterval {
    long long index = 2;
    int depth = 0;
    std::vector<int> digits;  // one 0/1 digit per descent
    Rat lo = 0, hi = 1;

    std::string word() const {
        std::string w;
        for (int d : digits) w.push_back(d ? '1' : '0');
        return w;
    }
};

inline CantorInterval cantor_interval(long long j) {
    if (j < 2) throw Error(Errc::invalid_index, "interval indices start at 2");
    if (j > (1LL << 62) - 1) throw Error(Errc::size_overflow, "interval index too deep");
    int depth = 0;
    while ((1LL << (depth + 1)) < j) ++depth;
    long long offset = j - (1LL << depth) - 1;
    CantorInterval iv;
    iv.index = j;
    iv.depth = depth;
    for (int b = depth - 1; b >= 0; --b) iv.digits.push_back(static_cast<int>((offset >> b) & 1));
    for (int d : iv.digits) {
        Rat third = (iv.hi - iv.lo) / 3;
        if (d == 0)
            iv.hi = iv.lo + third;
        else
            iv.lo = iv.hi - third;
    }
    return iv;
}

/// Bipartite incidence graph of the middle-thirds system truncated at depth
/// d: one vertex per interval with index 2..2^{d+1} (ids 0..2^{d+1}-2) and
/// one per branch word in {0,1}^d (ids 2^{d+1}-1 + value of the word), with
/// an edge when the interval's digit word is a prefix of the branch word.
struct CantorGraphResult {
    Graph graph;
    int depth = 0;
    std::vector<CantorInterval> intervals;   // vertex id i is interval index i + 2
    std::vector<std::string> branch_words;   // vertex id interval_count() + b

    int interval_count() const { return static_cast<int>(intervals.size()); }
    int branch_count() const { return static_cast<int>(branch_words.size()); }
    bool is_interval(int v) const { return v >= 0 && v < interval_count(); }
};

inline CantorGraphResult cantor_graph(int d, int max_vertices = 1 << 22) {
    if (d < 0) throw Error(Errc::invalid_argument, "depth must be >= 0");
    if (d > 60 || (3LL << d) - 1 > max_vertices)
        throw Error(Errc::size_overflow, "cantor graph of depth " + std::to_string(d) +
                                             " exceeds the vertex limit");
    CantorGraphResult res;
    res.depth = d;
    long long interval_count = (1LL << (d + 1)) - 1;
    long long branch_count = 1LL << d;
    for (long long j = 2; j <= interval_count + 1; ++j)
        res.intervals.push_back(cantor_interval(j));
    for (long long b = 0; b < branch_count; ++b) {
        std::string w;
        for (int bit = d - 1; bit >= 0; --bit) w.push_back(((b >> bit) & 1) ? '1' : '0');
        res.branch_words.push_back(w);
    }
    res.graph = Graph(static_cast<int>(interval_count + branch_count));
    for (int i = 0; i < res.interval_count(); ++i) {
        const std::string word = res.intervals[i].word();
        int depth_i = res.intervals[i].depth;
        // Branches extending this digit word: all ways to fill the free bits.
        long long prefix = 0;
        for (char ch : word) prefix = (prefix << 1) | (ch == '1');
        long long free_bits = d - depth_i;
        long long base = prefix << free_bits;
        for (long long fill = 0; fill < (1LL << free_bits); ++fill)
            res.graph.add_edge(i, res.interval_count() + static_cast<int>(base + fill));
    }
    return res;
}

/// The m shallowest intervals along the all-zero chain (indices 2, 3, 5, 9,
/// ..., 2^{m-1}+1) together with every branch below the deepest of them form
/// a K(m, 2^{d-m+1}) in cantor_graph(d).
inline BicliqueWitness cantor_chain_biclique(int d, int m, int max_vertices = 1 << 22) {
    if (d < 0) throw Error(Errc::invalid_argument, "depth must be >= 0");
    if (m < 1 || m > d + 1)
        throw Error(Errc::invalid_chain,
                    "chain length must lie in [1, depth + 1], got " + std::to_string(m));
    CantorGraphResult cg = cantor_graph(d, max_vertices);
    BicliqueWitness w;
    w.left.push_back(0);  // interval index 2, the root [0, 1]
    for (int i = 1; i < m; ++i) w.left.push_back((1 << i) - 1);  // interval index 2^i + 1
    long long t = 1LL << (d - m + 1);
    for (long long b = 0; b < t; ++b)
        w.right.push_back(cg.interval_count() + static_cast<int>(b));
    if (!check_biclique(cg.graph, w.left, w.right))
        throw Error(Errc::invalid_chain, "internal: chain witness failed validation");
    return w;
}

/// Hypercube graph Q_d on {0,1}^d, edges between words differing in one bit.
inline Graph hypercube_graph(int d) {
    if (d < 0) throw Error(Errc::invalid_argument, "dimension must be >= 0");
    if (d > 20) throw Error(Errc::size_overflow, "hypercube dimension too large");
    int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

}  // namespace sigraph
