#include "oval/sections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace oval {

namespace {

Point normalize(Point p) {
    double n = norm(p);
    return {p.x / n, p.y / n};
}

/// Collapses points closer than tol in circular arclength. Keeps one
/// representative per group, preferring an exact vertex (t == 0).
std::vector<BoundaryPoint> dedupe_by_arclength(std::vector<BoundaryPoint> pts, double L,
                                               double tol) {
    std::sort(pts.begin(), pts.end(),
              [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.s < b.s; });
    std::vector<std::vector<BoundaryPoint>> groups;
    for (const BoundaryPoint& bp : pts) {
        if (groups.empty() || bp.s - groups.back().back().s > tol)
            groups.emplace_back();
        groups.back().push_back(bp);
    }
    // wraparound: the trailing group may be the same point as the leading one
    if (groups.size() >= 2) {
        double gap = (L - groups.back().back().s) + groups.front().front().s;
        if (gap <= tol) {
            for (const BoundaryPoint& bp : groups.back())
                groups.front().push_back(bp);
            groups.pop_back();
        }
    }
    std::vector<BoundaryPoint> out;
    out.reserve(groups.size());
    for (const auto& g : groups) {
        const BoundaryPoint* rep = &g.front();
        for (const BoundaryPoint& bp : g)
            if (bp.t == 0.0) {
                rep = &bp;
                break;
            }
        out.push_back(*rep);
    }
    std::sort(out.begin(), out.end(),
              [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.s < b.s; });
    return out;
}

} // namespace

Bisector bisector_of(const ConvexPolygon& P, int i, int j) {
    if (i == j) throw ValidationError("bisector needs two distinct vertices");
    if (i > j) std::swap(i, j);
    Bisector b;
    b.i = i;
    b.j = j;
    b.midpoint = 0.5 * (P.vertex(i) + P.vertex(j));
    b.direction = normalize(rotate90(P.vertex(j) - P.vertex(i)));
    return b;
}

std::vector<BoundaryPoint> bisector_boundary_intersections(const ConvexPolygon& P,
                                                           const Bisector& bis,
                                                           bool* edge_on_line) {
    const int n = P.size();
    const double eps = P.eps_len();
    const Point nhat = normalize(rotate90(bis.direction)); // unit normal of the line
    auto signed_dist = [&](const Point& p) { return dot(p - bis.midpoint, nhat); };

    std::vector<BoundaryPoint> out;
    for (int e = 0; e < n; ++e) {
        double su = signed_dist(P.vertex(e));
        double sw = signed_dist(P.vertex(e + 1));
        bool u_on = std::abs(su) <= eps;
        bool w_on = std::abs(sw) <= eps;
        if (u_on && w_on) {
            // entire edge on the line; cannot happen for strictly convex
            // input but kept total for hand-built data
            out.push_back(boundary_point_on_edge(P, e, 0.0));
            out.push_back(boundary_point_on_edge(P, e + 1, 0.0));
            if (edge_on_line != nullptr) *edge_on_line = true;
        } else if (u_on) {
            out.push_back(boundary_point_on_edge(P, e, 0.0));
        } else if (!w_on && ((su > 0.0) != (sw > 0.0))) {
            double t = su / (su - sw);
            out.push_back(boundary_point_on_edge(P, e, t));
        }
        // a near-line end vertex (w_on only) is emitted by the next edge
    }
    return dedupe_by_arclength(std::move(out), P.perimeter, eps);
}

SectionDecomposition build_sections(const ConvexPolygon& P) {
    const int n = P.size();
    const double L = P.perimeter;

    std::vector<BoundaryPoint> raw;
    bool degenerate = false;
    const double eps = P.eps_len();
    std::vector<double> sd(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Point mid = 0.5 * (P.vertex(i) + P.vertex(j));
            Point nhat = P.vertex(j) - P.vertex(i);
            double nn = norm(nhat);
            nhat = {nhat.x / nn, nhat.y / nn};
            for (int v = 0; v < n; ++v)
                sd[static_cast<size_t>(v)] = dot(P.vertex(v) - mid, nhat);
            for (int e = 0; e < n; ++e) {
                double su = sd[static_cast<size_t>(e)];
                double sw = sd[static_cast<size_t>((e + 1) % n)];
                bool u_on = std::abs(su) <= eps;
                bool w_on = std::abs(sw) <= eps;
                if (u_on && w_on) {
                    raw.push_back(boundary_point_on_edge(P, e, 0.0));
                    raw.push_back(boundary_point_on_edge(P, e + 1, 0.0));
                    degenerate = true;
                } else if (u_on) {
                    raw.push_back(boundary_point_on_edge(P, e, 0.0));
                } else if (!w_on && ((su > 0.0) != (sw > 0.0))) {
                    raw.push_back(boundary_point_on_edge(P, e, su / (su - sw)));
                }
            }
        }

    double probe_tie_s = 0.0;
    for (int attempt = 0; attempt < 2; ++attempt) {
        double tol = P.eps_len() / (attempt == 0 ? 1.0 : 2.0);
        std::vector<BoundaryPoint> pts = dedupe_by_arclength(raw, L, tol);
        const std::size_t K = pts.size();
        if (K < 2)
            throw DegeneracyError("section points collapsed to fewer than two", 0.0);

        SectionDecomposition dec;
        dec.degenerate_bisector = degenerate;
        dec.section_points = pts;
        dec.sections.reserve(K);

        bool tie = false;
        auto strict_farthest = [&](double s) {
            Point x = point_at_arclength(P, s).point;
            int best = 0;
            double best2 = -1.0;
            for (int v = 0; v < n; ++v) {
                double d2 = norm2(P.vertices[static_cast<size_t>(v)] - x);
                if (d2 > best2) {
                    best2 = d2;
                    best = v;
                }
            }
            return best;
        };
        // The farthest vertex is constant on the open arc, so the strict
        // maximum must agree at interior probes; near-symmetric polygons
        // produce micro-arcs where tolerance-based tie sets would be blind.
        auto make_section = [&](const BoundaryPoint& a, const BoundaryPoint& b, double end_s) {
            Section sec;
            sec.start_s = a.s;
            sec.end_s = end_s;
            sec.start_bp = a;
            sec.end_bp = b;
            double len = sec.end_s - sec.start_s;
            int w1 = strict_farthest(sec.start_s + 0.25 * len);
            int w2 = strict_farthest(sec.start_s + 0.50 * len);
            int w3 = strict_farthest(sec.start_s + 0.75 * len);
            if (w1 != w2 || w2 != w3) {
                tie = true;
                probe_tie_s = std::fmod(sec.start_s + 0.5 * len, L);
                return sec;
            }
            sec.farthest_vertex = w2;
            return sec;
        };

        // wrapping arc first, so numbering starts with the arc through s = 0
        dec.sections.push_back(make_section(pts[K - 1], pts[0], pts[0].s + L));
        for (std::size_t k = 1; k < K && !tie; ++k)
            dec.sections.push_back(make_section(pts[k - 1], pts[k], pts[k].s));
        if (!tie) return dec;
    }
    throw DegeneracyError("ambiguous farthest vertex at section probe, arclength " +
                              std::to_string(probe_tie_s),
                          probe_tie_s);
}

std::vector<RefinedSection> refine_sections(const ConvexPolygon& P,
                                            const SectionDecomposition& dec) {
    const double L = P.perimeter;
    const double eps = P.eps_len();

    std::vector<RefinedSection> out;
    std::vector<double> cuts;
    for (std::size_t sid = 0; sid < dec.sections.size(); ++sid) {
        const Section& sec = dec.sections[sid];
        cuts.clear();
        cuts.push_back(sec.start_s);
        for (double off : {0.0, L}) {
            auto it = std::upper_bound(P.cum_arclength.begin(), P.cum_arclength.end(),
                                       sec.start_s + eps - off);
            for (; it != P.cum_arclength.end() && *it + off < sec.end_s - eps; ++it)
                cuts.push_back(*it + off);
        }
        std::sort(cuts.begin() + 1, cuts.end());
        cuts.push_back(sec.end_s);

        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            double a = cuts[c], b = cuts[c + 1];
            RefinedSection rs;
            rs.parent = static_cast<int>(sid);
            rs.start_s = a;
            rs.end_s = b;
            rs.edge = point_at_arclength(P, 0.5 * (a + b)).edge;
            rs.segment = {point_at_arclength(P, a).point, point_at_arclength(P, b).point};
            rs.farthest_vertex = sec.farthest_vertex;
            const Point& y = P.vertex(rs.farthest_vertex);
            SegmentFoot foot = closest_point_on_segment(y, rs.segment);
            rs.z_star = foot.point;
            rs.z_t = std::clamp(foot.t, 0.0, 1.0);
            rs.d = distance_to_segment(y, rs.segment);
            out.push_back(rs);
        }
    }
    return out;
}

DeltaReport compute_delta(const ConvexPolygon& P) {
    DeltaReport rep;
    rep.decomposition = build_sections(P);
    rep.decomposition.refined = refine_sections(P, rep.decomposition);

    const auto& refined = rep.decomposition.refined;
    double delta = std::numeric_limits<double>::infinity();
    for (const RefinedSection& rs : refined)
        delta = std::min(delta, rs.d);
    rep.delta = delta;
    const double eps = P.eps_len();
    for (std::size_t i = 0; i < refined.size(); ++i)
        if (refined[i].d - delta <= eps) rep.min_refined.push_back(i);

    rep.quotient = P.perimeter / delta;
    rep.perimeter_le_two_pi_delta = P.perimeter <= 2.0 * std::numbers::pi * delta + eps;
    rep.perimeter_ge_pi_delta = P.perimeter + eps >= std::numbers::pi * delta;
    return rep;
}

std::vector<DistinguishedChord> distinguished_chords(const ConvexPolygon& P,
                                                     const DeltaReport& report) {
    const double L = P.perimeter;
    const double eps = P.eps_len();
    const double delta = report.delta;
    std::vector<DistinguishedChord> chords;

    auto boundary_at = [&](double s) { return point_at_arclength(P, std::fmod(s, L)); };

    for (std::size_t id : report.min_refined) {
        const RefinedSection& rs = report.decomposition.refined[id];

        DistinguishedChord c;
        c.p0 = boundary_at(rs.start_s + rs.z_t * (rs.end_s - rs.start_s));
        c.p0.point = rs.z_star;
        c.q0 = rs.farthest_vertex;
        c.length = dist(rs.z_star, P.vertex(rs.farthest_vertex));
        chords.push_back(c);

        for (double s_end : {rs.start_s, rs.end_s}) {
            BoundaryPoint a = boundary_at(s_end);
            if (std::abs(dist(a.point, P.vertex(rs.farthest_vertex)) - delta) > eps) continue;
            for (int q = 0; q < P.size(); ++q) {
                if (q == rs.farthest_vertex) continue;
                double dq = dist(a.point, P.vertex(q));
                if (std::abs(dq - delta) <= eps) chords.push_back({a, q, dq});
            }
        }
    }

    std::sort(chords.begin(), chords.end(),
              [](const DistinguishedChord& a, const DistinguishedChord& b) {
                  if (a.p0.s != b.p0.s) return a.p0.s < b.p0.s;
                  return a.q0 < b.q0;
              });
    std::vector<DistinguishedChord> unique;
    for (const DistinguishedChord& c : chords) {
        bool dup = false;
        for (const DistinguishedChord& u : unique) {
            double ds = std::abs(c.p0.s - u.p0.s);
            ds = std::min(ds, L - ds);
            if (ds <= eps && c.q0 == u.q0) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(c);
    }
    return unique;
}

DeltaReport full_report(const ConvexPolygon& P) {
    DeltaReport rep = compute_delta(P);
    rep.chords = distinguished_chords(P, rep);
    return rep;
}

double section_closure_distance(const ConvexPolygon& P, const Section& sec) {
    const int n = P.size();
    const double L = P.perimeter;
    const Point& y = P.vertex(sec.farthest_vertex);
    double best = std::numeric_limits<double>::infinity();
    for (int e = 0; e < n; ++e) {
        double e0 = P.cum_arclength[static_cast<size_t>(e)];
        double e1 = e0 + P.edge_length(e);
        for (double off : {0.0, L}) {
            double lo = std::max(sec.start_s, e0 + off);
            double hi = std::min(sec.end_s, e1 + off);
            if (hi - lo <= 0.5 * P.eps_len()) continue;
            Segment piece{point_at_arclength(P, lo).point, point_at_arclength(P, hi).point};
            best = std::min(best, distance_to_segment(y, piece));
        }
    }
    return best;
}

} // namespace oval
