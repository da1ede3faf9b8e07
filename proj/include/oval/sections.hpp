#pragma once

#include <cstddef>
#include <vector>

#include "oval/geometry.hpp"

namespace oval {

/// Perpendicular bisector of the vertex pair (i, j), i < j, as a line given
/// by the pair midpoint and a unit direction orthogonal to v_j - v_i.
struct Bisector {
    int i = 0;
    int j = 0;
    Point midpoint;
    Point direction;
};

/// Open boundary arc between two consecutive section points on which the
/// farthest vertex is constant and unique. end_s may exceed the perimeter
/// for the arc that wraps past arclength 0.
struct Section {
    double start_s = 0.0;
    double end_s = 0.0;
    int farthest_vertex = 0;
    BoundaryPoint start_bp;
    BoundaryPoint end_bp;
};

/// A section clipped to a single edge, with the nearest point z* of the
/// farthest vertex on its closure and the corresponding distance d.
struct RefinedSection {
    int parent = 0; // index into SectionDecomposition::sections
    int edge = 0;
    double start_s = 0.0;
    double end_s = 0.0;
    Segment segment;
    int farthest_vertex = 0;
    Point z_star;
    double z_t = 0.0; // clamped parameter of z* on segment
    double d = 0.0;
};

struct SectionDecomposition {
    std::vector<BoundaryPoint> section_points; // deduplicated, ascending arclength
    std::vector<Section> sections;             // boundary order, wrapping arc first
    std::vector<RefinedSection> refined;
    bool degenerate_bisector = false; // an edge lay entirely on some bisector
};

/// Chord from a boundary point p0 to a vertex q0 realizing the minimax
/// invariant: length == delta and d(p0, q) <= length for all boundary q.
struct DistinguishedChord {
    BoundaryPoint p0;
    int q0 = 0;
    double length = 0.0;
};

struct DeltaReport {
    double delta = 0.0;
    double quotient = 0.0; // perimeter / delta
    SectionDecomposition decomposition;
    std::vector<std::size_t> min_refined; // refined sections attaining delta
    std::vector<DistinguishedChord> chords;
    bool perimeter_le_two_pi_delta = false; // theorem, must always hold
    bool perimeter_ge_pi_delta = false;     // conjectured bound, reported only
};

Bisector bisector_of(const ConvexPolygon& P, int i, int j);

/// Crossing points of the bisector line with the boundary, ascending by
/// arclength. Vertices on the line count once; an edge lying entirely on the
/// line contributes both endpoints and raises *edge_on_line.
std::vector<BoundaryPoint> bisector_boundary_intersections(const ConvexPolygon& P,
                                                           const Bisector& bis,
                                                           bool* edge_on_line = nullptr);

/// Intersects all vertex-pair bisectors with the boundary and probes each
/// open arc at its arclength midpoint for the unique farthest vertex.
/// A tie at a probe point halves the dedup tolerance and retries once,
/// then fails with a DegeneracyError.
SectionDecomposition build_sections(const ConvexPolygon& P);

/// Splits every section at the polygon vertices it contains so each piece
/// lies on one edge, and computes z* and d for each piece.
std::vector<RefinedSection> refine_sections(const ConvexPolygon& P,
                                            const SectionDecomposition& dec);

/// delta = min over refined sections of d, with diagnostics.
DeltaReport compute_delta(const ConvexPolygon& P);

/// All distinguished chords: [z*, y(S)] for every minimizing refined section,
/// plus [a, q] for every endpoint a of such a section at distance delta from
/// its farthest vertex and every other vertex q at distance delta from a.
std::vector<DistinguishedChord> distinguished_chords(const ConvexPolygon& P,
                                                     const DeltaReport& report);

/// compute_delta with the chord list filled in.
DeltaReport full_report(const ConvexPolygon& P);

/// Distance from the section's farthest vertex to the closed (possibly
/// multi-edge) section arc, computed directly from edge clipping. Agrees
/// with the min over that section's refined pieces.
double section_closure_distance(const ConvexPolygon& P, const Section& sec);

} // namespace oval
