#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sigraph/graph.hpp"
#include "sigraph/families.hpp"
#include "sigraph/rational.hpp"

namespace sigraph {

/// One coordinate: an exact rational, or a formal signed square root of a
/// positive non-square rational.  Construction normalizes: roots of perfect
/// squares collapse to rationals, so is_rational() is a canonical property.
class Coord {
public:
    Coord() : value_(0) {}
    Coord(Rat v) : value_(std::move(v)) {}
    Coord(int v) : value_(v) {}

    static Coord root(const Rat& radicand, int sign = 1) {
        if (radicand < 0)
            throw Error(Errc::invalid_argument, "negative radicand " + rat_to_string(radicand));
        if (radicand == 0) return Coord(Rat(0));
        if (sign != 1 && sign != -1)
            throw Error(Errc::invalid_argument, "root sign must be +1 or -1");
        if (auto s = exact_sqrt(radicand)) return Coord(sign > 0 ? *s : -*s);
        Coord c;
        c.rational_ = false;
        c.radicand_ = radicand;
        c.sign_ = sign;
        return c;
    }

    bool is_rational() const { return rational_; }
    bool is_zero() const { return rational_ && value_ == 0; }

    const Rat& rational_value() const {
        if (!rational_) throw Error(Errc::incompatible_coordinates, "coordinate is a formal root");
        return value_;
    }

    const Rat& radicand() const {
        if (rational_) throw Error(Errc::incompatible_coordinates, "coordinate is rational");
        return radicand_;
    }

    int sign() const {
        if (!rational_) return sign_;
        return value_ == 0 ? 0 : (value_ > 0 ? 1 : -1);
    }

    /// The square of the coordinate, always an exact rational.
    Rat square() const { return rational_ ? value_ * value_ : radicand_; }

    bool operator==(const Coord& o) const {
        if (rational_ != o.rational_) return false;  // normalized roots are irrational
        if (rational_) return value_ == o.value_;
        return sign_ == o.sign_ && radicand_ == o.radicand_;
    }

private:
    bool rational_ = true;
    Rat value_;     // when rational_
    Rat radicand_;  // when !rational_, positive and not a perfect square
    int sign_ = 1;
};

struct ExactPoint {
    std::vector<Coord> coords;

    ExactPoint() = default;
    ExactPoint(std::initializer_list<Coord> cs) : coords(cs) {}
    explicit ExactPoint(std::vector<Coord> cs) : coords(std::move(cs)) {}

    int dim() const { return static_cast<int>(coords.size()); }

    bool is_rational() const {
        for (const auto& c : coords)
            if (!c.is_rational()) return false;
        return true;
    }

    bool operator==(const ExactPoint& o) const { return coords == o.coords; }
};

/// Squared difference of one coordinate pair, when exactly representable:
/// both rational, a root against an exact zero, or two roots whose radicand
/// product is a perfect square (covers equal radicands).
inline std::optional<Rat> axis_diff_sq(const Coord& a, const Coord& b) {
    if (a.is_rational() && b.is_rational()) {
        Rat d = a.rational_value() - b.rational_value();
        return d * d;
    }
    if (a.is_rational() || b.is_rational()) {
        const Coord& rat = a.is_rational() ? a : b;
        const Coord& root = a.is_rational() ? b : a;
        if (rat.is_zero()) return root.radicand();
        return std::nullopt;
    }
    Rat prod = a.radicand() * b.radicand();
    if (auto s = exact_sqrt(prod))
        return a.radicand() + b.radicand() - 2 * a.sign() * b.sign() * *s;
    return std::nullopt;
}

inline bool support_compatible(const ExactPoint& p, const ExactPoint& q) {
    if (p.dim() != q.dim()) return false;
    for (int i = 0; i < p.dim(); ++i)
        if (!axis_diff_sq(p.coords[i], q.coords[i])) return false;
    return true;
}

inline Rat squared_distance(const ExactPoint& p, const ExactPoint& q) {
    if (p.dim() != q.dim())
        throw Error(Errc::dimension_error, "points of dimension " + std::to_string(p.dim()) +
                                               " and " + std::to_string(q.dim()));
    Rat sum = 0;
    for (int i = 0; i < p.dim(); ++i) {
        auto term = axis_diff_sq(p.coords[i], q.coords[i]);
        if (!term)
            throw Error(Errc::incompatible_coordinates,
                        "axis " + std::to_string(i) + " mixes a formal root with an "
                        "incompatible coordinate");
        sum += *term;
    }
    return sum;
}

/// Distance set, held as squared values: a finite list plus an optional
/// geometric tail c_sq * q_sq^k (k >= 0).  Membership is an exact test.
struct DSpec {
    struct Tail {
        Rat c_sq;
        Rat q_sq;
    };

    std::vector<Rat> finite_sq;  // sorted, unique, positive
    std::optional<Tail> tail;

    bool finite() const { return !tail.has_value(); }
    bool empty() const { return finite_sq.empty() && !tail; }

    void validate() const {
        for (const Rat& v : finite_sq)
            if (v <= 0)
                throw Error(Errc::invalid_distance_spec,
                            "squared distance " + rat_to_string(v) + " not positive");
        if (tail) {
            if (tail->c_sq <= 0 || tail->q_sq <= 0)
                throw Error(Errc::invalid_distance_spec, "tail parameters must be positive");
            if (tail->q_sq == 1)
                throw Error(Errc::invalid_distance_spec, "tail ratio must differ from 1");
        }
    }

    void normalize() {
        std::sort(finite_sq.begin(), finite_sq.end());
        finite_sq.erase(std::unique(finite_sq.begin(), finite_sq.end()), finite_sq.end());
        validate();
    }

    bool contains_sq(const Rat& d_sq) const {
        if (d_sq <= 0) return false;
        if (std::find(finite_sq.begin(), finite_sq.end(), d_sq) != finite_sq.end()) return true;
        if (!tail) return false;
        Rat x = d_sq / tail->c_sq;  // in the tail iff x is a power q_sq^k, k >= 0
        if (tail->q_sq > 1)
            while (x > 1) x /= tail->q_sq;
        else
            while (x < 1 && x > 0) x /= tail->q_sq;
        return x == 1;
    }

    /// k-th tail squared distance, c_sq * q_sq^k.
    Rat tail_sq(int k) const {
        if (!tail) throw Error(Errc::invalid_distance_spec, "distance spec has no tail");
        Rat v = tail->c_sq;
        for (int i = 0; i < k; ++i) v *= tail->q_sq;
        return v;
    }
};

/// Grammar: components separated by ';', each `sq:<r>,<r>,...` or
/// `tail:<c_sq>,<q_sq>` with rationals as `num/den` (or plain integers).
inline DSpec parse_dspec(const std::string& text) {
    DSpec d;
    std::size_t pos = 0;
    bool saw_any = false;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string part = text.substr(pos, end - pos);
        pos = end + 1;
        if (part.empty()) continue;
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::parse_error, "distance spec component '" + part + "' has no tag");
        std::string tag = part.substr(0, colon);
        std::string body = part.substr(colon + 1);
        std::vector<Rat> vals;
        std::size_t vp = 0;
        while (vp <= body.size()) {
            std::size_t ve = body.find(',', vp);
            if (ve == std::string::npos) ve = body.size();
            vals.push_back(parse_rat(body.substr(vp, ve - vp)));
            vp = ve + 1;
        }
        if (tag == "sq") {
            d.finite_sq.insert(d.finite_sq.end(), vals.begin(), vals.end());
        } else if (tag == "tail") {
            if (vals.size() != 2)
                throw Error(Errc::parse_error, "tail takes exactly c_sq,q_sq");
            if (d.tail) throw Error(Errc::parse_error, "duplicate tail component");
            d.tail = DSpec::Tail{vals[0], vals[1]};
        } else {
            throw Error(Errc::parse_error, "unknown distance spec tag '" + tag + "'");
        }
        saw_any = true;
    }
    if (!saw_any) throw Error(Errc::parse_error, "empty distance spec");
    d.normalize();
    return d;
}

inline std::string dspec_to_string(const DSpec& d) {
    std::string out;
    if (!d.finite_sq.empty()) {
        out += "sq:";
        for (std::size_t i = 0; i < d.finite_sq.size(); ++i) {
            if (i) out += ",";
            out += rat_to_short_string(d.finite_sq[i]);
        }
    }
    if (d.tail) {
        if (!out.empty()) out += ";";
        out += "tail:" + rat_to_short_string(d.tail->c_sq) + "," +
               rat_to_short_string(d.tail->q_sq);
    }
    return out;
}

/// X_n(D) restricted to the given sample: edge iff the exact squared
/// distance belongs to the spec.
inline Graph distance_graph_points(int n, const std::vector<ExactPoint>& pts, const DSpec& d) {
    d.validate();
    for (const auto& p : pts)
        if (p.dim() != n)
            throw Error(Errc::dimension_error, "point of dimension " + std::to_string(p.dim()) +
                                                   " in R^" + std::to_string(n));
    Graph g(static_cast<int>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (d.contains_sq(squared_distance(pts[i], pts[j])))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

struct ClassifyReport {
    enum class Verdict { countable, uncountable };
    enum class WitnessPlan { none, x3, x4 };

    Verdict verdict = Verdict::countable;
    std::string clause;  // which classification clause fired
    WitnessPlan witness_plan = WitnessPlan::none;
};

/// Decides whether the list-chromatic number of X_n(D) is countable: yes for
/// n <= 2 unconditionally; for n = 3 exactly when no infinite subset of D is
/// bounded away from zero, i.e. when the spec has no increasing tail; no for
/// n >= 4.
inline ClassifyReport classify_distance_graph(int n, const DSpec& d) {
    if (n < 1) throw Error(Errc::dimension_error, "dimension must be >= 1");
    d.validate();
    ClassifyReport rep;
    if (n <= 2) {
        rep.verdict = ClassifyReport::Verdict::countable;
        rep.clause = "n <= 2";
        rep.witness_plan = ClassifyReport::WitnessPlan::none;
    } else if (n == 3 && d.finite()) {
        rep.verdict = ClassifyReport::Verdict::countable;
        rep.clause = "n = 3 and D finite: every infinite subset condition is vacuous";
        rep.witness_plan = ClassifyReport::WitnessPlan::none;
    } else if (n == 3 && d.tail->q_sq < 1) {
        rep.verdict = ClassifyReport::Verdict::countable;
        rep.clause = "n = 3 and every infinite subset of D accumulates at 0";
        rep.witness_plan = ClassifyReport::WitnessPlan::none;
    } else if (n == 3) {
        rep.verdict = ClassifyReport::Verdict::uncountable;
        rep.clause = "n = 3 and D has an infinite subset bounded away from 0";
        rep.witness_plan = ClassifyReport::WitnessPlan::x3;
    } else {
        rep.verdict = ClassifyReport::Verdict::uncountable;
        rep.clause = "n >= 4";
        rep.witness_plan = ClassifyReport::WitnessPlan::x4;
    }
    return rep;
}

/// Default tangent parameters 0, 1, 1/2, 1/3, ...: distinct, nonnegative,
/// and matching the documented small examples.
inline std::vector<Rat> default_tangents(int k) {
    std::vector<Rat> ts;
    for (int i = 0; i < k; ++i) ts.emplace_back(i == 0 ? Rat(0) : Rat(1, i));
    return ts;
}

namespace detail {

/// Point on the circle of squared radius r_sq via the rational (tangent
/// half-angle) parametrization; returns the two circle coordinates.
inline std::pair<Coord, Coord> circle_point(const Rat& r_sq, const Rat& t) {
    Rat den = 1 + t * t;
    Rat cx = (1 - t * t) / den;
    Rat cy = 2 * t / den;
    auto scale = [&](const Rat& c) -> Coord {
        if (c == 0) return Coord(Rat(0));
        return Coord::root(r_sq * c * c, c > 0 ? 1 : -1);
    };
    return {scale(cx), scale(cy)};
}

inline void check_tangents(const std::vector<Rat>& ts, int k) {
    if (k < 1) throw Error(Errc::invalid_sample_count, "sample count must be >= 1");
    if (static_cast<int>(ts.size()) != k)
        throw Error(Errc::invalid_sample_count,
                    "need exactly " + std::to_string(k) + " tangent parameters");
    std::set<Rat> uniq(ts.begin(), ts.end());
    if (static_cast<int>(uniq.size()) != k)
        throw Error(Errc::invalid_sample_count, "tangent parameters must be distinct");
}

}  // namespace detail

struct WitnessVerification {
    long long pairs_checked = 0;
    bool all_exact = false;
    std::vector<Rat> targets_sq;  // the exact squared distances certified
};

/// Two orthogonal circles of squared radius d_sq/2 in R^4: every cross pair
/// is at squared distance exactly d_sq, since the supports are disjoint and
/// the mixed terms vanish.
struct X4Witness {
    Rat d_sq;
    std::vector<ExactPoint> a;  // on {(x, y, 0, 0) : x^2 + y^2 = d_sq/2}
    std::vector<ExactPoint> b;  // on {(0, 0, z, w) : z^2 + w^2 = d_sq/2}
    std::vector<Rat> tangents;
    WitnessVerification verification;
};

inline X4Witness witness_x4(const Rat& d_sq, int k, std::vector<Rat> ts = {}) {
    if (d_sq <= 0) throw Error(Errc::invalid_argument, "target squared distance must be positive");
    if (k < 1) throw Error(Errc::invalid_sample_count, "sample count must be >= 1");
    if (ts.empty()) ts = default_tangents(k);
    detail::check_tangents(ts, k);
    X4Witness w;
    w.d_sq = d_sq;
    w.tangents = ts;
    Rat r_sq = d_sq / 2;
    for (const Rat& t : ts) {
        auto [cx, cy] = detail::circle_point(r_sq, t);
        w.a.push_back(ExactPoint{cx, cy, Coord(0), Coord(0)});
        w.b.push_back(ExactPoint{Coord(0), Coord(0), cx, cy});
    }
    w.verification.targets_sq = {d_sq};
    w.verification.all_exact = true;
    for (const auto& p : w.a)
        for (const auto& q : w.b) {
            ++w.verification.pairs_checked;
            if (squared_distance(p, q) != d_sq) w.verification.all_exact = false;
        }
    return w;
}

/// Spheres through a common circle in R^3: centers on the x-axis at height
/// sqrt(d_i^2 - rho^2) above the plane of a fixed circle of squared radius
/// rho_sq; every center-to-circle distance is exactly the i-th tail distance.
struct X3Witness {
    DSpec::Tail tail;
    Rat rho_sq;
    std::vector<ExactPoint> centers;      // (sqrt(d_i^2 - rho_sq), 0, 0)
    std::vector<ExactPoint> points;       // (0, y, z) with y^2 + z^2 = rho_sq
    std::vector<Rat> center_targets_sq;   // d_i^2 per center
    std::vector<Rat> tangents;
    WitnessVerification verification;
};

inline X3Witness witness_x3(const DSpec& d, const Rat& rho_sq, int k_centers, int k_points,
                            std::vector<Rat> ts = {}) {
    d.validate();
    if (!d.tail || d.tail->q_sq < 1)
        throw Error(Errc::not_bounded_away_from_zero,
                    "need an increasing tail: no infinite distance subset is bounded away from 0");
    if (rho_sq <= 0) throw Error(Errc::invalid_argument, "circle radius must be positive");
    if (rho_sq >= d.tail->c_sq)
        throw Error(Errc::radius_too_large,
                    "squared circle radius " + rat_to_string(rho_sq) +
                        " must be below the least tail distance " + rat_to_string(d.tail->c_sq));
    if (k_centers < 1) throw Error(Errc::invalid_sample_count, "need at least one center");
    if (ts.empty()) ts = default_tangents(k_points);
    detail::check_tangents(ts, k_points);

    X3Witness w;
    w.tail = *d.tail;
    w.rho_sq = rho_sq;
    w.tangents = ts;
    for (int i = 0; i < k_centers; ++i) {
        Rat di_sq = d.tail_sq(i);
        w.center_targets_sq.push_back(di_sq);
        w.centers.push_back(ExactPoint{Coord::root(di_sq - rho_sq), Coord(0), Coord(0)});
    }
    for (const Rat& t : ts) {
        auto [cy, cz] = detail::circle_point(rho_sq, t);
        w.points.push_back(ExactPoint{Coord(0), cy, cz});
    }
    w.verification.targets_sq = w.center_targets_sq;
    w.verification.all_exact = true;
    for (std::size_t i = 0; i < w.centers.size(); ++i)
        for (const auto& p : w.points) {
            ++w.verification.pairs_checked;
            if (squared_distance(w.centers[i], p) != w.center_targets_sq[i])
                w.verification.all_exact = false;
        }
    return w;
}

/// Exact count of points at some distance of D from both x and y: for every
/// pair of squared radii the two circles meet in 0, 1, or 2 points by the
/// sign of the discriminant; solutions are deduplicated across radius pairs
/// by their exact radical-line representation (foot parameter a along y - x,
/// squared height, side).
inline int plane_common_neighbor_count(const ExactPoint& x, const ExactPoint& y, const DSpec& d) {
    if (x.dim() != 2 || y.dim() != 2)
        throw Error(Errc::dimension_error, "plane bound requires dimension 2");
    if (!x.is_rational() || !y.is_rational())
        throw Error(Errc::incompatible_coordinates, "plane bound requires rational points");
    if (!d.finite()) throw Error(Errc::invalid_distance_spec, "plane bound requires finite D");
    d.validate();
    if (x == y) throw Error(Errc::degenerate_pair, "the two points coincide");

    Rat ux = y.coords[0].rational_value() - x.coords[0].rational_value();
    Rat uy = y.coords[1].rational_value() - x.coords[1].rational_value();
    Rat dd = ux * ux + uy * uy;
    std::set<std::tuple<Rat, Rat, int>> solutions;
    for (const Rat& r1_sq : d.finite_sq)
        for (const Rat& r2_sq : d.finite_sq) {
            Rat a = (r1_sq - r2_sq + dd) / (2 * dd);
            Rat h_sq = r1_sq / dd - a * a;
            if (h_sq < 0) continue;
            if (h_sq == 0) {
                solutions.insert({a, h_sq, 0});
            } else {
                solutions.insert({a, h_sq, 1});
                solutions.insert({a, h_sq, -1});
            }
        }
    return static_cast<int>(solutions.size());
}

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Unit-distance realization of the hypercube {0,1}^d in the rational plane:
/// word w maps to the sum of the unit vectors picked by its bits.  Tangent
/// parameters are drawn from a seeded generator and redrawn until the 2^d
/// points are distinct and their exact unit-distance graph is the cube graph
/// and nothing more.
struct HypercubeEmbedding {
    int dim = 0;
    std::uint64_t seed = kDefaultSeed;
    int retries_used = 1;  // attempts consumed, counting the successful one
    std::vector<Rat> tangents;
    std::vector<ExactPoint> points;  // index = word value, coordinates rational
    std::vector<int> map;            // word value -> point index (identity)
    Graph unit_graph;                // exact unit-distance graph on the points
    Graph cube;                      // reference Q_d
};

inline HypercubeEmbedding hypercube_embedding(int d, std::uint64_t seed = kDefaultSeed,
                                              int max_retries = 32) {
    if (d < 1) throw Error(Errc::invalid_argument, "dimension must be >= 1");
    if (d > 16) throw Error(Errc::size_overflow, "dimension too large for exact verification");
    std::mt19937_64 rng(seed);
    HypercubeEmbedding emb;
    emb.dim = d;
    emb.seed = seed;
    emb.cube = hypercube_graph(d);
    int n = 1 << d;
    std::string last_failure = "no attempts allowed";
    std::string last_params;

    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        std::set<Rat> used;
        std::vector<Rat> ts;
        while (static_cast<int>(ts.size()) < d) {
            Rat t(1 + static_cast<long long>(rng() % 997), 1 + static_cast<long long>(rng() % 89));
            if (used.insert(t).second) ts.push_back(t);
        }
        last_params.clear();
        for (const Rat& t : ts)
            last_params += (last_params.empty() ? "" : ", ") + rat_to_string(t);
        std::vector<std::pair<Rat, Rat>> units;
        for (const Rat& t : ts) {
            Rat den = 1 + t * t;
            units.emplace_back((1 - t * t) / den, 2 * t / den);
        }
        std::vector<std::pair<Rat, Rat>> pts(n, {Rat(0), Rat(0)});
        for (int w = 0; w < n; ++w)
            for (int b = 0; b < d; ++b)
                if (w & (1 << b)) {
                    pts[w].first += units[b].first;
                    pts[w].second += units[b].second;
                }
        std::set<std::pair<Rat, Rat>> distinct(pts.begin(), pts.end());
        if (static_cast<int>(distinct.size()) != n) {
            last_failure = "coincident points";
            continue;
        }
        Graph unit(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                Rat dx = pts[u].first - pts[v].first;
                Rat dy = pts[u].second - pts[v].second;
                if (dx * dx + dy * dy == 1) unit.add_edge(u, v);
            }
        if (unit.edges() != emb.cube.edges()) {
            last_failure = "spurious or missing unit distances";
            continue;
        }
        emb.retries_used = attempt;
        emb.tangents = ts;
        for (int w = 0; w < n; ++w) {
            emb.points.push_back(ExactPoint{Coord(pts[w].first), Coord(pts[w].second)});
            emb.map.push_back(w);
        }
        emb.unit_graph = std::move(unit);
        return emb;
    }
    throw Error(Errc::genericity_failure,
                "no generic parameter set within " + std::to_string(max_retries) + " attempts (" +
                    last_failure + "; last tangents: " + last_params + ")");
}

}  // namespace sigraph
