/*
 * Quadrant-generated convex polygons in the rational plane.
 *
 * A polygon here is the convex hull of finitely many translated quadrants
 * p + (R_+)^2. Its boundary is a convex staircase, stored as the list of
 * vertices sorted by increasing x (hence decreasing y). A decorated polygon
 * attaches a monomial c * u^l to every vertex.
 */
#pragma once

#include <compare>
#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "newton_mellin/rational.hpp"

namespace nm {

struct Point {
    Rational x;
    Rational y;

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

class Polygon {
public:
    /// The empty polygon (no vertices).
    Polygon() = default;

    /// Throws DomainError unless the list is a strictly convex staircase.
    static Polygon from_vertices(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const& noexcept { return vertices_; }
    std::vector<Point> vertices() && { return std::move(vertices_); }
    bool empty() const noexcept { return vertices_.empty(); }
    bool is_vertex(const Point& p) const;

    /// Region membership: q dominates some point of the lower boundary.
    bool contains(const Point& q) const;

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point> vertices_;
};

/// Vertices of conv(U (p + R_+^2)). Collinear boundary points are not vertices.
Polygon staircase_hull(std::span<const Point> points);

/// Minkowski sum. The empty polygon is absorbing.
Polygon minkowski(const Polygon& p1, const Polygon& p2);

/// The unique (v1, v2), v_i a vertex of p_i, with v1 + v2 = v. Throws
/// DomainError if v is not a vertex of the sum and std::logic_error if the
/// exhaustive scan finds more than one decomposition.
std::pair<Point, Point> decompose_vertex(const Polygon& p1, const Polygon& p2, const Point& v);

Polygon translate(const Polygon& p, const Point& delta);

/// Monomial coefficient * u^degree attached to a vertex.
struct Decoration {
    std::complex<double> coefficient;
    int degree = 0;
};

/// Degrees equal and coefficients within `rel_tol` of the larger modulus.
bool approx_equal(const Decoration& a, const Decoration& b, double rel_tol = 1e-9);

class DecoratedPolygon {
public:
    DecoratedPolygon() = default;

    /// Throws DomainError unless the decoration keys are exactly the vertices.
    DecoratedPolygon(Polygon polygon, std::map<Point, Decoration> decorations);

    /// Hull of the candidate points, keeping the decorations of the points
    /// that end up as vertices. An empty map gives the empty polygon.
    static DecoratedPolygon from_candidates(const std::map<Point, Decoration>& candidates);

    const Polygon& polygon() const& noexcept { return polygon_; }
    Polygon polygon() && { return std::move(polygon_); }
    const std::map<Point, Decoration>& decorations() const& noexcept { return decorations_; }
    std::map<Point, Decoration> decorations() && { return std::move(decorations_); }
    const Decoration& decoration(const Point& vertex) const;
    bool empty() const noexcept { return polygon_.empty(); }

private:
    Polygon polygon_;
    std::map<Point, Decoration> decorations_;
};

DecoratedPolygon decorated_minkowski(const DecoratedPolygon& d1, const DecoratedPolygon& d2);
DecoratedPolygon translate(const DecoratedPolygon& d, const Point& delta);

struct PolygonComparison {
    bool vertices_equal = false;
    bool decorations_match = false;
    /// Largest relative coefficient deviation over common vertices.
    double max_deviation = 0.0;

    bool equal() const noexcept { return vertices_equal && decorations_match; }
};

PolygonComparison compare(const DecoratedPolygon& a, const DecoratedPolygon& b, double rel_tol = 1e-9);

}  // namespace nm
