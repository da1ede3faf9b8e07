#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "oval/geometry.hpp"
#include "oval/sections.hpp"

namespace oval {

// Normalized triangles: A = (-1,0), B = (1,0) span a diameter, apex
// C = (x,y) ranges over {x >= 0, y > 0, (x+1)^2 + y^2 <= 4}.

/// Separating curve between the two nearest-point cases of the arc opposite
/// the long diameter: psi1(0) = sqrt((sqrt(33)-1)/2), psi1(1) = 0.
double psi1(double x);
/// Separating line y = 1 + x between foot-inside and foot-outside cases.
double psi3(double x);

struct TriangleDelta {
    double delta = 0.0;
    std::string region; // "disk", "I", "II", "III", "IV"
};

/// Closed-form minimax invariant of the normalized triangle.
/// Inside the unit circle around the diameter midpoint delta == 1; outside,
/// delta == y above y = psi3(x) and delta == ((1+x)^2+y^2)/(2(1+x)) below.
TriangleDelta triangle_delta_closed_form(double x, double y);

double triangle_perimeter(double x, double y);
double triangle_quotient_closed_form(double x, double y);

struct EllipticCoords {
    double u = 0.0;
    double v = 0.0;
};

/// (u, v) = half-sum and half-difference of the distances to (-1,0), (1,0).
EllipticCoords elliptic_from_cartesian(double x, double y);
/// Inverse on the upper half plane: x = u v, y = sqrt((u^2-1)(1-v^2)).
std::pair<double, double> cartesian_from_elliptic(double u, double v);

struct TriangleScanResult {
    double min_quotient = 0.0;
    double argmin_x = 0.0;
    double argmin_y = 0.0;
    std::size_t evaluated = 0;
    double max_closed_form_gap = 0.0; // vs the section algorithm, when cross-checked
    bool upper_bound_ok = true;       // L <= 2*pi*delta at every grid point
};

/// Grid scan of L/delta over the triangle moduli set. With cross_check each
/// grid point is also run through the section algorithm and a disagreement
/// beyond 1e-9 aborts the scan.
TriangleScanResult triangle_scan(int grid_n, bool cross_check = true);

/// Quotient of the symmetric kite family with equal perpendiculars,
/// f(u) = 4u(u^2+1)/(3u^2-1) for u > 1/sqrt(3).
double kite_quotient(double u);
/// The lower apex parameter paired with u: v = u(3-u^2)/(3u^2-1).
double kite_v(double u);
/// Argmin of f, the positive root of 3u^4 - 6u^2 - 1 = 0.
double kite_minimize();

/// The extremal kite: (-1,0), (1,0), (0, sqrt(3+2*sqrt(3))/sqrt(3)),
/// (0, -sqrt(2*sqrt(3)-3)/3).
ConvexPolygon magic_kite();

struct QuadrangleSearchResult {
    double best_quotient = 0.0;
    std::array<double, 4> best_params{}; // u0, u, v0, v
    ConvexPolygon best_polygon;
    std::size_t skipped = 0;     // candidates rejected as nonconvex/inadmissible
    std::size_t evaluations = 0;
};

/// Multi-restart compass search for the minimal quotient over quadrangles
/// with the fixed diameter (-1,0)-(1,0), one vertex above and one below.
QuadrangleSearchResult quadrangle_search(std::uint64_t seed, int restarts, int iters);

} // namespace oval
