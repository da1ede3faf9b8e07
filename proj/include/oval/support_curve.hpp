#pragma once

#include <vector>

#include "oval/geometry.hpp"

namespace oval {

/// One trigonometric term a*cos(m*theta) + b*sin(m*theta), m >= 2.
/// m == 1 is excluded: it only translates the curve.
struct Harmonic {
    int m = 0;
    double a = 0.0;
    double b = 0.0;
};

/// Smooth strictly convex curve given by its support function
/// h(theta) = a0 + sum of harmonics. The curvature radius is
/// rho(theta) = h + h''; construction rejects curves with rho <= 0
/// anywhere on a dense grid.
class SupportCurve {
public:
    SupportCurve(double a0, std::vector<Harmonic> harmonics);

    double h(double theta) const;
    double h_prime(double theta) const;
    double h_second(double theta) const;
    double rho(double theta) const { return h(theta) + h_second(theta); }

    double a0() const { return a0_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }
    int max_harmonic() const { return max_m_; }
    double rho_min() const { return rho_min_; }
    /// Upper bound k of the curvature, max over the validation grid of 1/rho.
    double curvature_bound() const { return 1.0 / rho_min_; }

private:
    double a0_ = 0.0;
    std::vector<Harmonic> harmonics_;
    int max_m_ = 0;
    double rho_min_ = 0.0;
};

/// Point with outward normal (cos theta, sin theta):
/// h*(cos, sin) + h'*(-sin, cos).
Point curve_point(const SupportCurve& curve, double theta);

struct CurveMetrics {
    double length = 0.0;          // integral of h over the period
    double curvature_bound = 0.0; // max of 1/rho on the grid
    double breadth_min = 0.0;     // min of h(theta) + h(theta+pi)
    double breadth_max = 0.0;
};

CurveMetrics curve_metrics(const SupportCurve& curve, int quadrature_n);

struct InscribedPolygon {
    ConvexPolygon polygon;
    double lambda = 0.0; // max curve arclength between consecutive vertices
    double curvature_bound = 0.0;
    std::vector<double> thetas;
};

/// Inscribes an n-gon with near-uniform arclength gaps (arclength table by
/// trapezoid quadrature, inverted by binary search). Throws HypothesisError
/// when lambda >= pi/(2k), carrying the minimal admissible n.
InscribedPolygon inscribe_polygon(const SupportCurve& curve, int n, int quadrature_n = 2048);

struct DeltaBounds {
    double delta_low = 0.0;     // invariant of the inscribed polygon
    double delta_high = 0.0;    // delta_low + lambda * tan(k * lambda)
    double delta_polygon = 0.0;
    double lambda = 0.0;
    double curvature_bound = 0.0;
};

/// Two-sided enclosure of the curve's minimax invariant from the inscribed
/// polygon: delta(P) <= delta(curve) <= delta(P) + lambda*tan(k*lambda).
DeltaBounds delta_bounds(const SupportCurve& curve, int n, int quadrature_n = 2048);

} // namespace oval
