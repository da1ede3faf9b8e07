#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "oval/errors.hpp"

namespace oval {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double norm2(Point p) { return p.x * p.x + p.y * p.y; }
inline double dist(Point a, Point b) { return norm(b - a); }
inline Point rotate90(Point p) { return {-p.y, p.x}; }
inline Point lerp(Point a, Point b, double t) {
    return {(1.0 - t) * a.x + t * b.x, (1.0 - t) * a.y + t * b.y};
}

struct Segment {
    Point a;
    Point b;
};

/// Strictly convex polygon with counter-clockwise vertex order and a
/// cumulative arclength table (one entry per vertex, cum_arclength[0] == 0).
/// Built through validate_polygon; the fields are expected to be consistent.
struct ConvexPolygon {
    std::vector<Point> vertices;
    std::vector<double> cum_arclength;
    double perimeter = 0.0;
    double diam = 0.0; // max pairwise vertex distance, the tolerance scale

    int size() const { return static_cast<int>(vertices.size()); }
    const Point& vertex(int i) const {
        int n = size();
        return vertices[static_cast<size_t>(((i % n) + n) % n)];
    }
    Segment edge(int i) const { return {vertex(i), vertex(i + 1)}; }
    double edge_length(int i) const;

    /// Coincidence tolerance for lengths and arclengths, scale-free.
    double eps_len() const { return 1e-9 * diam; }
    /// Tolerance for convexity cross products.
    double eps_area() const { return 1e-12 * diam * diam; }
};

/// A point on the polygon boundary addressed three ways: (edge index,
/// parameter t in [0,1)), global arclength s in [0,L), and coordinates.
/// t == 0 exactly when the point is vertex `edge`.
struct BoundaryPoint {
    int edge = 0;
    double t = 0.0;
    double s = 0.0;
    Point point;
};

struct DiameterResult {
    int i = 0;
    int j = 0;
    double length = 0.0;
    std::vector<std::pair<int, int>> ties; // all pairs attaining the max
};

/// Nearest point of a segment; t is the unclamped line parameter
/// <z-a, b-a>/|b-a|^2, point is the clamped nearest point.
struct SegmentFoot {
    Point point;
    double t = 0.0;
};

struct FarthestResult {
    std::vector<int> indices; // all vertices within eps_len of the max
    double mu = 0.0;
};

SegmentFoot closest_point_on_segment(const Point& z, const Segment& seg);
double distance_to_segment(const Point& z, const Segment& seg);

/// Validates raw vertices into a ConvexPolygon. Clockwise input is reversed;
/// nonconvex, collinear or duplicate input is rejected with the offending
/// vertex index.
ConvexPolygon validate_polygon(std::vector<Point> raw_vertices);

/// Boundary point at arclength s (taken modulo the perimeter).
BoundaryPoint point_at_arclength(const ConvexPolygon& P, double s);
double arclength_of(const ConvexPolygon& P, const BoundaryPoint& bp);
BoundaryPoint boundary_point_on_edge(const ConvexPolygon& P, int edge, double t);

/// All vertices at maximal distance from x, with the max distance mu.
/// By convexity this max equals the max over the whole polygon.
FarthestResult farthest_vertices(const ConvexPolygon& P, const Point& x);

/// Max distance from x to the polygon (farthest-distance function).
double mu(const ConvexPolygon& P, const Point& x);

DiameterResult diameter(const ConvexPolygon& P);

} // namespace oval
