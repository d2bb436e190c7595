#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sigraph/error.hpp"

namespace sigraph {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1, stored as sorted
/// adjacency lists.  Loops are rejected, parallel edges collapse.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(check_size(n)) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    std::size_t edge_count() const { return edge_count_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw Error(Errc::invalid_edge, "loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) return;
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++edge_count_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
        return d;
    }

    /// All edges as pairs (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw Error(Errc::invalid_vertex, "vertex " + std::to_string(v) +
                                                  " out of range [0, " +
                                                  std::to_string(vertex_count()) + ")");
    }

private:
    static int check_size(int n) {
        if (n < 0) throw Error(Errc::invalid_argument, "negative vertex count");
        return n;
    }

    static void insert_sorted(std::vector<int>& a, int v) {
        a.insert(std::upper_bound(a.begin(), a.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

/// Subgraph induced by `vs` (duplicates collapse); vertex i of the result is
/// the i-th smallest member of `vs`.  Returns the sorted vertex set too.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // result index -> original vertex, ascending
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vs) {
    for (int v : vs) g.check_vertex(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (int w : g.neighbors(vs[i]))
            if (index[w] > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), index[w]);
    return {std::move(sub), std::move(vs)};
}

/// Vertices adjacent to every member of `xs` (members themselves excluded
/// since the graph is loopless).  `xs` must be nonempty.
inline std::vector<int> common_neighbors(const Graph& g, const std::vector<int>& xs) {
    if (xs.empty()) throw Error(Errc::empty_query, "common_neighbors of no vertices");
    for (int x : xs) g.check_vertex(x);
    std::vector<int> acc = g.neighbors(xs[0]);
    for (std::size_t i = 1; i < xs.size() && !acc.empty(); ++i) {
        const auto& nb = g.neighbors(xs[i]);
        std::vector<int> next;
        std::set_intersection(acc.begin(), acc.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

/// Connected components; each component's vertex list is ascending.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

/// Text format:
///   c <comment>
///   p <n> <m>
///   e <u> <v>        (0-based, one line per edge)
/// The writer sorts edges and emits u < v; the reader accepts any order.
inline void write_graph_text(std::ostream& os, const Graph& g) {
    os << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
}

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    write_graph_text(os, g);
    return os.str();
}

inline Graph read_graph_text(std::istream& is) {
    std::string line;
    bool have_header = false;
    int n = 0;
    long long m = -1, seen = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank
        auto fail = [&](const std::string& why) {
            throw Error(Errc::parse_error,
                        "graph text line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail("duplicate p line");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed p line");
            g = Graph(n);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) fail("e line before p line");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed e line");
            std::size_t before = g.edge_count();
            g.add_edge(u, v);
            if (g.edge_count() > before) ++seen;
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw Error(Errc::parse_error, "graph text: missing p line");
    if (seen != m)
        throw Error(Errc::parse_error, "graph text: p line declares " + std::to_string(m) +
                                           " edges, found " + std::to_string(seen));
    return g;
}

inline Graph graph_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_graph_text(is);
}

}  // namespace sigraph
