#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sigraph/euclid.hpp"
#include "sigraph/graph.hpp"
#include "sigraph/rational.hpp"

namespace sigraph {

/// Multivariate polynomial with rational coefficients, stored sparsely as
/// exponent-vector -> coefficient.  Zero coefficients are never kept.
struct Polynomial {
    int n_vars = 0;
    std::map<std::vector<unsigned>, Rat> terms;

    static Polynomial constant(int n_vars, const Rat& c) {
        Polynomial p;
        p.n_vars = n_vars;
        p.add_term(std::vector<unsigned>(n_vars, 0), c);
        return p;
    }

    static Polynomial variable(int n_vars, int i) {
        Polynomial p;
        p.n_vars = n_vars;
        std::vector<unsigned> e(n_vars, 0);
        e[i] = 1;
        p.add_term(std::move(e), 1);
        return p;
    }

    void add_term(std::vector<unsigned> exps, const Rat& coeff) {
        if (static_cast<int>(exps.size()) != n_vars)
            throw Error(Errc::dimension_error, "exponent vector arity mismatch");
        if (coeff == 0) return;
        auto [it, inserted] = terms.emplace(std::move(exps), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    Rat eval(const std::vector<Rat>& p) const {
        if (static_cast<int>(p.size()) != n_vars)
            throw Error(Errc::dimension_error,
                        "polynomial of arity " + std::to_string(n_vars) + " evaluated at a " +
                            std::to_string(p.size()) + "-dimensional point");
        Rat sum = 0;
        for (const auto& [exps, coeff] : terms) {
            Rat term = coeff;
            for (int i = 0; i < n_vars; ++i)
                for (unsigned e = 0; e < exps[i]; ++e) term *= p[i];
            sum += term;
        }
        return sum;
    }
};

enum class Rel { lt, eq, gt };

inline const char* rel_name(Rel r) {
    switch (r) {
        case Rel::lt: return "<";
        case Rel::eq: return "=";
        case Rel::gt: return ">";
    }
    return "?";
}

struct Atom {
    Polynomial poly;
    Rel rel;
};

/// Quantifier-free boolean combination of polynomial sign conditions.
class SemialgFormula {
public:
    enum class Kind { atom, conj, disj, neg };

    static SemialgFormula atom(Polynomial p, Rel r) {
        SemialgFormula f;
        f.kind_ = Kind::atom;
        f.atom_ = std::make_shared<Atom>(Atom{std::move(p), r});
        return f;
    }

    static SemialgFormula conj(std::vector<SemialgFormula> parts) {
        SemialgFormula f;
        f.kind_ = Kind::conj;
        f.children_ = std::move(parts);
        return f;
    }

    static SemialgFormula disj(std::vector<SemialgFormula> parts) {
        SemialgFormula f;
        f.kind_ = Kind::disj;
        f.children_ = std::move(parts);
        return f;
    }

    static SemialgFormula neg(SemialgFormula inner) {
        SemialgFormula f;
        f.kind_ = Kind::neg;
        f.children_.push_back(std::move(inner));
        return f;
    }

    Kind kind() const { return kind_; }

    const Atom& get_atom() const { return *atom_; }

    const std::vector<SemialgFormula>& children() const { return children_; }

    bool eval(const std::vector<Rat>& p) const {
        switch (kind_) {
            case Kind::atom: {
                Rat v = atom_->poly.eval(p);
                switch (atom_->rel) {
                    case Rel::lt: return v < 0;
                    case Rel::eq: return v == 0;
                    case Rel::gt: return v > 0;
                }
                return false;
            }
            case Kind::conj:
                for (const auto& c : children_)
                    if (!c.eval(p)) return false;
                return true;
            case Kind::disj:
                for (const auto& c : children_)
                    if (c.eval(p)) return true;
                return false;
            case Kind::neg:
                return !children_[0].eval(p);
        }
        return false;
    }

    void check_arity(int dim) const {
        if (kind_ == Kind::atom) {
            if (atom_->poly.n_vars != dim)
                throw Error(Errc::dimension_error,
                            "atom arity " + std::to_string(atom_->poly.n_vars) +
                                " inside a set of dimension " + std::to_string(dim));
            return;
        }
        for (const auto& c : children_) c.check_arity(dim);
    }

private:
    Kind kind_ = Kind::conj;  // empty conjunction = true
    std::shared_ptr<const Atom> atom_;
    std::vector<SemialgFormula> children_;
};

struct SemialgSet {
    int dim = 0;
    SemialgFormula formula;

    void validate() const { formula.check_arity(dim); }
};

inline bool eval_semialg(const SemialgSet& s, const std::vector<Rat>& p) {
    if (static_cast<int>(p.size()) != s.dim)
        throw Error(Errc::dimension_error, "point dimension " + std::to_string(p.size()) +
                                               " against set dimension " + std::to_string(s.dim));
    s.validate();
    return s.formula.eval(p);
}

/// Finite truncation of a countable union of edge predicates over R^n x R^n.
struct SigmaFamily {
    int n = 0;                        // vertex dimension
    std::vector<SemialgSet> members;  // each of dimension 2n

    void validate() const {
        if (n < 1) throw Error(Errc::dimension_error, "vertex dimension must be >= 1");
        for (const auto& m : members) {
            if (m.dim != 2 * n)
                throw Error(Errc::dimension_error,
                            "edge predicate dimension " + std::to_string(m.dim) +
                                " should be " + std::to_string(2 * n));
            m.validate();
        }
    }
};

enum class SampleMode { symmetrize, strict };

struct SampledSigmaGraph {
    Graph graph;
    std::vector<Edge> edge_list;                 // sorted (u < v)
    std::vector<std::vector<int>> edge_members;  // accepting member indices per edge
};

/// Graph induced by the union of the family's edge predicates on a finite
/// rational sample.  In strict mode the relation must already be symmetric
/// and irreflexive on the sample; symmetrize mode takes the union with its
/// transpose and ignores the diagonal.  With disjoint_members set, edge
/// attribution keeps only the first accepting member (the pairwise-disjoint
/// normalization); the edge set itself never changes.
inline SampledSigmaGraph sample_sigma_graph_detailed(const SigmaFamily& f,
                                                     const std::vector<std::vector<Rat>>& pts,
                                                     SampleMode mode,
                                                     bool disjoint_members = false) {
    f.validate();
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != f.n)
            throw Error(Errc::dimension_error, "sample point of dimension " +
                                                   std::to_string(p.size()) + " in R^" +
                                                   std::to_string(f.n));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw Error(Errc::duplicate_vertex, "sample points " + std::to_string(i) +
                                                        " and " + std::to_string(j) +
                                                        " coincide");

    auto accepting = [&](int i, int j) {
        std::vector<Rat> pair;
        pair.reserve(2 * f.n);
        pair.insert(pair.end(), pts[i].begin(), pts[i].end());
        pair.insert(pair.end(), pts[j].begin(), pts[j].end());
        std::vector<int> hits;
        for (std::size_t m = 0; m < f.members.size(); ++m)
            if (f.members[m].formula.eval(pair)) hits.push_back(static_cast<int>(m));
        return hits;
    };

    int n = static_cast<int>(pts.size());
    if (mode == SampleMode::strict)
        for (int i = 0; i < n; ++i)
            if (!accepting(i, i).empty())
                throw Error(Errc::not_a_graph_relation,
                            "relation is not irreflexive: accepts (" + std::to_string(i) + ", " +
                                std::to_string(i) + ")");

    SampledSigmaGraph out;
    out.graph = Graph(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> fwd = accepting(i, j);
            std::vector<int> rev = accepting(j, i);
            if (mode == SampleMode::strict && fwd.empty() != rev.empty())
                throw Error(Errc::not_a_graph_relation,
                            "relation is not symmetric on pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
            std::vector<int> members;
            std::set_union(fwd.begin(), fwd.end(), rev.begin(), rev.end(),
                           std::back_inserter(members));
            if (members.empty()) continue;
            if (disjoint_members) members.resize(1);
            out.graph.add_edge(i, j);
            out.edge_list.emplace_back(i, j);
            out.edge_members.push_back(std::move(members));
        }
    return out;
}

inline Graph sample_sigma_graph(const SigmaFamily& f, const std::vector<std::vector<Rat>>& pts,
                                SampleMode mode = SampleMode::symmetrize) {
    return sample_sigma_graph_detailed(f, pts, mode).graph;
}

/// Edge predicate "squared distance equals d_sq" over R^n x R^n:
/// sum_i (x_i - y_i)^2 - d_sq = 0.
inline SemialgSet distance_sq_eq_set(int n, const Rat& d_sq) {
    if (n < 1) throw Error(Errc::dimension_error, "vertex dimension must be >= 1");
    Polynomial p;
    p.n_vars = 2 * n;
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned> e(2 * n, 0);
        e[i] = 2;
        p.add_term(e, 1);  // x_i^2
        std::fill(e.begin(), e.end(), 0);
        e[n + i] = 2;
        p.add_term(e, 1);  // y_i^2
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        e[n + i] = 1;
        p.add_term(e, -2);  // -2 x_i y_i
    }
    p.add_term(std::vector<unsigned>(2 * n, 0), -d_sq);
    return SemialgSet{2 * n, SemialgFormula::atom(std::move(p), Rel::eq)};
}

/// One predicate per finite squared distance plus the first tail_terms tail
/// values: the finite truncation of the distance graph's edge union.
inline SigmaFamily dspec_sigma_family(int n, const DSpec& d, int tail_terms = 0) {
    d.validate();
    SigmaFamily f;
    f.n = n;
    for (const Rat& v : d.finite_sq) f.members.push_back(distance_sq_eq_set(n, v));
    for (int k = 0; k < tail_terms; ++k) f.members.push_back(distance_sq_eq_set(n, d.tail_sq(k)));
    return f;
}

}  // namespace sigraph
