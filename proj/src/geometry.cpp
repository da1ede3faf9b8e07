#include "oval/geometry.hpp"

#include <algorithm>
#include <string>

namespace oval {

double ConvexPolygon::edge_length(int i) const {
    return dist(vertex(i), vertex(i + 1));
}

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void require_nondegenerate(const Segment& seg) {
    double len = dist(seg.a, seg.b);
    if (len <= 1e-12 * (norm(seg.a) + norm(seg.b)) || len == 0.0)
        throw ValidationError("degenerate segment: endpoints coincide");
}

} // namespace

SegmentFoot closest_point_on_segment(const Point& z, const Segment& seg) {
    require_nondegenerate(seg);
    Point d = seg.b - seg.a;
    double t = dot(z - seg.a, d) / norm2(d);
    double tc = std::clamp(t, 0.0, 1.0);
    return {seg.a + tc * d, t};
}

double distance_to_segment(const Point& z, const Segment& seg) {
    require_nondegenerate(seg);
    Point u = z - seg.a;
    Point d = seg.b - seg.a;
    double t = dot(u, d) / norm2(d);
    if (t <= 0.0) return norm(u);
    if (t >= 1.0) return dist(z, seg.b);
    // interior foot: |u ^ d| / |d|. The wedge norm sqrt(|u|^2|d|^2 - <u,d>^2)
    // equals |cross(u, d)| in the plane; the cross form avoids cancellation
    // for points near the segment line.
    return std::abs(cross(u, d)) / norm(d);
}

ConvexPolygon validate_polygon(std::vector<Point> raw) {
    const int n = static_cast<int>(raw.size());
    if (n < 3)
        throw ValidationError("polygon requires n >= 3 vertices, got " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (!finite(raw[static_cast<size_t>(i)]))
            throw ValidationError("vertex " + std::to_string(i) + " is not finite", i);

    double diam = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            diam = std::max(diam, dist(raw[static_cast<size_t>(i)], raw[static_cast<size_t>(j)]));
    if (diam <= 0.0)
        throw ValidationError("all vertices coincide");
    const double eps_len = 1e-9 * diam;
    const double eps_area = 1e-12 * diam * diam;

    double area2 = 0.0;
    for (int i = 0; i < n; ++i)
        area2 += cross(raw[static_cast<size_t>(i)], raw[static_cast<size_t>((i + 1) % n)]);
    if (area2 < 0.0)
        std::reverse(raw.begin(), raw.end());

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(raw[static_cast<size_t>(i)], raw[static_cast<size_t>(j)]) < eps_len)
                throw ValidationError("vertices " + std::to_string(i) + " and " +
                                          std::to_string(j) + " coincide",
                                      j);

    for (int i = 0; i < n; ++i) {
        Point a = raw[static_cast<size_t>(i)];
        Point b = raw[static_cast<size_t>((i + 1) % n)];
        Point c = raw[static_cast<size_t>((i + 2) % n)];
        if (cross(b - a, c - b) <= eps_area)
            throw ValidationError("vertex " + std::to_string((i + 1) % n) +
                                      ": collinear or reflex turn",
                                  (i + 1) % n);
    }

    ConvexPolygon P;
    P.vertices = std::move(raw);
    P.diam = diam;
    P.cum_arclength.resize(static_cast<size_t>(n));
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        P.cum_arclength[static_cast<size_t>(i)] = s;
        s += dist(P.vertices[static_cast<size_t>(i)], P.vertices[static_cast<size_t>((i + 1) % n)]);
    }
    P.perimeter = s;
    return P;
}

BoundaryPoint point_at_arclength(const ConvexPolygon& P, double s) {
    const double L = P.perimeter;
    const int n = P.size();
    s = std::fmod(s, L);
    if (s < 0.0) s += L;

    auto it = std::upper_bound(P.cum_arclength.begin(), P.cum_arclength.end(), s);
    int e = static_cast<int>(it - P.cum_arclength.begin()) - 1;
    double len = P.edge_length(e);
    double t = (s - P.cum_arclength[static_cast<size_t>(e)]) / len;

    // snap arithmetic-level noise onto vertices so t == 0 iff vertex
    const double snap = 1e-13 * L;
    double edge_end = (e + 1 < n) ? P.cum_arclength[static_cast<size_t>(e + 1)] : L;
    if (s - P.cum_arclength[static_cast<size_t>(e)] <= snap) {
        t = 0.0;
        s = P.cum_arclength[static_cast<size_t>(e)];
    } else if (edge_end - s <= snap) {
        e = (e + 1) % n;
        t = 0.0;
        s = P.cum_arclength[static_cast<size_t>(e)];
    }
    if (t >= 1.0) { // guard against rounding at the far edge end
        e = (e + 1) % n;
        t = 0.0;
        s = P.cum_arclength[static_cast<size_t>(e)];
    }

    BoundaryPoint bp;
    bp.edge = e;
    bp.t = t;
    bp.s = s;
    bp.point = (t == 0.0) ? P.vertex(e) : lerp(P.vertex(e), P.vertex(e + 1), t);
    return bp;
}

double arclength_of(const ConvexPolygon& P, const BoundaryPoint& bp) {
    double s = P.cum_arclength[static_cast<size_t>(bp.edge)] + bp.t * P.edge_length(bp.edge);
    s = std::fmod(s, P.perimeter);
    if (s < 0.0) s += P.perimeter;
    return s;
}

BoundaryPoint boundary_point_on_edge(const ConvexPolygon& P, int edge, double t) {
    const int n = P.size();
    edge = ((edge % n) + n) % n;
    if (t >= 1.0) {
        edge = (edge + 1) % n;
        t = 0.0;
    }
    BoundaryPoint bp;
    bp.edge = edge;
    bp.t = t;
    bp.s = P.cum_arclength[static_cast<size_t>(edge)] + t * P.edge_length(edge);
    if (bp.s >= P.perimeter) bp.s -= P.perimeter;
    bp.point = (t == 0.0) ? P.vertex(edge) : lerp(P.vertex(edge), P.vertex(edge + 1), t);
    return bp;
}

FarthestResult farthest_vertices(const ConvexPolygon& P, const Point& x) {
    FarthestResult r;
    double best2 = -1.0;
    for (const Point& v : P.vertices)
        best2 = std::max(best2, norm2(v - x));
    r.mu = std::sqrt(best2);
    const double eps = P.eps_len();
    for (int i = 0; i < P.size(); ++i)
        if (r.mu - dist(P.vertices[static_cast<size_t>(i)], x) <= eps)
            r.indices.push_back(i);
    return r;
}

double mu(const ConvexPolygon& P, const Point& x) {
    double best2 = 0.0;
    for (const Point& v : P.vertices)
        best2 = std::max(best2, norm2(v - x));
    return std::sqrt(best2);
}

DiameterResult diameter(const ConvexPolygon& P) {
    const int n = P.size();
    DiameterResult r;
    r.length = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r.length = std::max(r.length,
                                dist(P.vertices[static_cast<size_t>(i)],
                                     P.vertices[static_cast<size_t>(j)]));
    const double eps = P.eps_len();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (r.length - dist(P.vertices[static_cast<size_t>(i)],
                                P.vertices[static_cast<size_t>(j)]) <= eps)
                r.ties.emplace_back(i, j);
    r.i = r.ties.front().first;
    r.j = r.ties.front().second;
    return r;
}

} // namespace oval
