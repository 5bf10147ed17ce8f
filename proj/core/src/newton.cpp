#include "newton_mellin/newton.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "newton_mellin/error.hpp"

namespace nm {
namespace {

// Twice the signed area of (o, a, b); positive for a counter-clockwise turn.
Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool is_staircase(const std::vector<Point>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i].x > v[i - 1].x && v[i].y < v[i - 1].y)) return false;
    }
    for (std::size_t i = 2; i < v.size(); ++i) {
        if (!(cross(v[i - 2], v[i - 1], v[i]) > Rational(0))) return false;
    }
    return true;
}

}  // namespace

Polygon Polygon::from_vertices(std::vector<Point> vertices) {
    if (!is_staircase(vertices)) throw DomainError("vertex list is not a strictly convex staircase");
    Polygon p;
    p.vertices_ = std::move(vertices);
    return p;
}

bool Polygon::is_vertex(const Point& p) const { return std::ranges::binary_search(vertices_, p); }

bool Polygon::contains(const Point& q) const {
    if (vertices_.empty() || q.x < vertices_.front().x) return false;
    if (q.x >= vertices_.back().x) return q.y >= vertices_.back().y;
    // First vertex strictly right of q.x; q lies over the edge ending there.
    const auto hi = std::ranges::upper_bound(vertices_, q.x, {}, &Point::x);
    const auto lo = std::prev(hi);
    const Rational t = (q.x - lo->x) / (hi->x - lo->x);
    const Rational boundary_y = lo->y + t * (hi->y - lo->y);
    return q.y >= boundary_y;
}

Polygon staircase_hull(std::span<const Point> points) {
    if (points.empty()) throw DomainError("staircase_hull: empty point set");
    std::vector<Point> sorted(points.begin(), points.end());
    std::ranges::sort(sorted);

    // Pareto-minimal points: strictly increasing x, strictly decreasing y.
    std::vector<Point> front;
    for (const auto& p : sorted) {
        if (front.empty() || p.y < front.back().y) front.push_back(p);
    }

    // Lower convex chain; collinear points are dropped.
    std::vector<Point> hull;
    for (const auto& p : front) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= Rational(0)) hull.pop_back();
        hull.push_back(p);
    }
    return Polygon::from_vertices(std::move(hull));
}

Polygon minkowski(const Polygon& p1, const Polygon& p2) {
    if (p1.empty() || p2.empty()) return {};
    std::vector<Point> sums;
    sums.reserve(p1.vertices().size() * p2.vertices().size());
    for (const auto& a : p1.vertices()) {
        for (const auto& b : p2.vertices()) sums.push_back(a + b);
    }
    return staircase_hull(sums);
}

std::pair<Point, Point> decompose_vertex(const Polygon& p1, const Polygon& p2, const Point& v) {
    if (!minkowski(p1, p2).is_vertex(v)) {
        throw DomainError("decompose_vertex: (" + v.x.str() + "," + v.y.str() + ") is not a vertex of the sum");
    }
    std::optional<std::pair<Point, Point>> found;
    for (const auto& a : p1.vertices()) {
        for (const auto& b : p2.vertices()) {
            if (a + b != v) continue;
            if (found) throw std::logic_error("decompose_vertex: vertex of a Minkowski sum with two decompositions");
            found.emplace(a, b);
        }
    }
    if (!found) throw std::logic_error("decompose_vertex: vertex of a Minkowski sum with no decomposition");
    return *found;
}

Polygon translate(const Polygon& p, const Point& delta) {
    std::vector<Point> moved;
    moved.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) moved.push_back(v + delta);
    return Polygon::from_vertices(std::move(moved));
}

bool approx_equal(const Decoration& a, const Decoration& b, double rel_tol) {
    if (a.degree != b.degree) return false;
    const double scale = std::max(std::abs(a.coefficient), std::abs(b.coefficient));
    return std::abs(a.coefficient - b.coefficient) <= rel_tol * scale;
}

DecoratedPolygon::DecoratedPolygon(Polygon polygon, std::map<Point, Decoration> decorations)
    : polygon_(std::move(polygon)), decorations_(std::move(decorations)) {
    const bool keys_match = std::ranges::equal(polygon_.vertices(), decorations_,
                                               [](const Point& v, const auto& kv) { return v == kv.first; });
    if (!keys_match) throw DomainError("decorations must be given exactly on the polygon vertices");
    for (const auto& [p, d] : decorations_) {
        if (d.coefficient == std::complex<double>{} || d.degree < 0) {
            throw DomainError("decoration must be a nonzero monomial");
        }
    }
}

DecoratedPolygon DecoratedPolygon::from_candidates(const std::map<Point, Decoration>& candidates) {
    if (candidates.empty()) return {};
    std::vector<Point> points;
    points.reserve(candidates.size());
    for (const auto& [p, d] : candidates) points.push_back(p);
    Polygon hull = staircase_hull(points);
    std::map<Point, Decoration> decorations;
    for (const auto& v : hull.vertices()) decorations.emplace(v, candidates.at(v));
    return DecoratedPolygon(std::move(hull), std::move(decorations));
}

const Decoration& DecoratedPolygon::decoration(const Point& vertex) const {
    const auto it = decorations_.find(vertex);
    if (it == decorations_.end()) throw DomainError("not a vertex of the decorated polygon");
    return it->second;
}

DecoratedPolygon decorated_minkowski(const DecoratedPolygon& d1, const DecoratedPolygon& d2) {
    Polygon sum = minkowski(d1.polygon(), d2.polygon());
    std::map<Point, Decoration> decorations;
    for (const auto& v : sum.vertices()) {
        const auto [a, b] = decompose_vertex(d1.polygon(), d2.polygon(), v);
        const auto& da = d1.decoration(a);
        const auto& db = d2.decoration(b);
        decorations.emplace(v, Decoration{da.coefficient * db.coefficient, da.degree + db.degree});
    }
    return DecoratedPolygon(std::move(sum), std::move(decorations));
}

DecoratedPolygon translate(const DecoratedPolygon& d, const Point& delta) {
    std::map<Point, Decoration> moved;
    for (const auto& [p, dec] : d.decorations()) moved.emplace(p + delta, dec);
    return DecoratedPolygon(translate(d.polygon(), delta), std::move(moved));
}

PolygonComparison compare(const DecoratedPolygon& a, const DecoratedPolygon& b, double rel_tol) {
    PolygonComparison out;
    out.vertices_equal = a.polygon() == b.polygon();
    out.decorations_match = out.vertices_equal;
    for (const auto& [p, da] : a.decorations()) {
        const auto it = b.decorations().find(p);
        if (it == b.decorations().end()) continue;
        const auto& db = it->second;
        const double scale = std::max(std::abs(da.coefficient), std::abs(db.coefficient));
        out.max_deviation = std::max(out.max_deviation, std::abs(da.coefficient - db.coefficient) / scale);
        if (!approx_equal(da, db, rel_tol)) out.decorations_match = false;
    }
    return out;
}

}  // namespace nm
