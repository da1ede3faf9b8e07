#include "oval/support_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oval/sections.hpp"

namespace oval {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int grid_size(int minimum, int max_m) {
    int n = std::max(minimum, 32 * std::max(1, max_m));
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace

SupportCurve::SupportCurve(double a0, std::vector<Harmonic> harmonics)
    : a0_(a0), harmonics_(std::move(harmonics)) {
    if (!std::isfinite(a0)) throw ValidationError("a0 must be finite");
    for (const Harmonic& hm : harmonics_) {
        if (hm.m < 2)
            throw ValidationError("harmonic index must be >= 2, got " + std::to_string(hm.m));
        if (!std::isfinite(hm.a) || !std::isfinite(hm.b))
            throw ValidationError("harmonic coefficients must be finite");
        max_m_ = std::max(max_m_, hm.m);
    }
    int N = grid_size(4096, max_m_);
    rho_min_ = std::numeric_limits<double>::infinity();
    for (int i = 0; i < N; ++i)
        rho_min_ = std::min(rho_min_, rho(kTwoPi * i / N));
    if (!(rho_min_ > 0.0))
        throw ValidationError("curve is not strictly convex: curvature radius reaches " +
                              std::to_string(rho_min_));
}

double SupportCurve::h(double theta) const {
    double v = a0_;
    for (const Harmonic& hm : harmonics_)
        v += hm.a * std::cos(hm.m * theta) + hm.b * std::sin(hm.m * theta);
    return v;
}

double SupportCurve::h_prime(double theta) const {
    double v = 0.0;
    for (const Harmonic& hm : harmonics_)
        v += hm.m * (-hm.a * std::sin(hm.m * theta) + hm.b * std::cos(hm.m * theta));
    return v;
}

double SupportCurve::h_second(double theta) const {
    double v = 0.0;
    for (const Harmonic& hm : harmonics_)
        v -= hm.m * hm.m * (hm.a * std::cos(hm.m * theta) + hm.b * std::sin(hm.m * theta));
    return v;
}

Point curve_point(const SupportCurve& curve, double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    double hv = curve.h(theta), hp = curve.h_prime(theta);
    return {hv * c - hp * s, hv * s + hp * c};
}

CurveMetrics curve_metrics(const SupportCurve& curve, int quadrature_n) {
    if (quadrature_n < 64) throw ValidationError("quadrature_n must be at least 64");
    CurveMetrics m;
    // periodic trapezoid rule, exact for trigonometric polynomials once the
    // grid resolves twice the top harmonic
    double sum_h = 0.0;
    double inv_rho_max = 0.0;
    m.breadth_min = std::numeric_limits<double>::infinity();
    m.breadth_max = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < quadrature_n; ++i) {
        double theta = kTwoPi * i / quadrature_n;
        sum_h += curve.h(theta);
        inv_rho_max = std::max(inv_rho_max, 1.0 / curve.rho(theta));
        double breadth = curve.h(theta) + curve.h(theta + std::numbers::pi);
        m.breadth_min = std::min(m.breadth_min, breadth);
        m.breadth_max = std::max(m.breadth_max, breadth);
    }
    m.length = sum_h * kTwoPi / quadrature_n;
    m.curvature_bound = inv_rho_max;
    return m;
}

InscribedPolygon inscribe_polygon(const SupportCurve& curve, int n, int quadrature_n) {
    if (n < 3) throw ValidationError("inscribed polygon needs n >= 3 vertices");

    const int N = grid_size(std::max(quadrature_n, 32 * n), curve.max_harmonic());
    std::vector<double> arc(static_cast<size_t>(N) + 1, 0.0);
    std::vector<double> rho(static_cast<size_t>(N) + 1, 0.0);
    for (int i = 0; i <= N; ++i)
        rho[static_cast<size_t>(i)] = curve.rho(kTwoPi * i / N);
    for (int i = 0; i < N; ++i)
        arc[static_cast<size_t>(i) + 1] =
            arc[static_cast<size_t>(i)] +
            0.5 * (rho[static_cast<size_t>(i)] + rho[static_cast<size_t>(i) + 1]) * (kTwoPi / N);
    const double L = arc.back();

    // linear-interpolation slack of the arclength table, used to keep the
    // reported lambda an upper bound of the true max gap
    double max_drho = 0.0;
    for (int i = 0; i < N; ++i)
        max_drho = std::max(max_drho,
                            std::abs(rho[static_cast<size_t>(i) + 1] - rho[static_cast<size_t>(i)]));
    const double interp_slack = max_drho * (kTwoPi / N) / 8.0;

    auto theta_at = [&](double s) {
        auto it = std::upper_bound(arc.begin(), arc.end(), s);
        auto hi = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(
            it - arc.begin(), 1, static_cast<std::ptrdiff_t>(N)));
        std::size_t lo = hi - 1;
        double span = arc[hi] - arc[lo];
        double t = span > 0.0 ? (s - arc[lo]) / span : 0.0;
        return kTwoPi * (static_cast<double>(lo) + t) / N;
    };

    const double k = curve.curvature_bound();
    const double bound = std::numbers::pi / (2.0 * k);
    const double lambda = L / n + 2.0 * interp_slack;
    if (!(lambda < bound * (1.0 - 1e-12))) {
        int min_n = static_cast<int>(std::floor(2.0 * L * k / std::numbers::pi)) + 1;
        throw HypothesisError("arc gap " + std::to_string(lambda) +
                                  " is not below pi/(2k) = " + std::to_string(bound) +
                                  "; use at least n = " + std::to_string(min_n),
                              lambda, bound, min_n);
    }

    InscribedPolygon ins;
    ins.lambda = lambda;
    ins.curvature_bound = k;
    std::vector<Point> verts;
    verts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double theta = theta_at(L * i / n);
        ins.thetas.push_back(theta);
        verts.push_back(curve_point(curve, theta));
    }
    ins.polygon = validate_polygon(std::move(verts));
    return ins;
}

DeltaBounds delta_bounds(const SupportCurve& curve, int n, int quadrature_n) {
    InscribedPolygon ins = inscribe_polygon(curve, n, quadrature_n);
    DeltaBounds b;
    b.lambda = ins.lambda;
    b.curvature_bound = ins.curvature_bound;
    b.delta_polygon = compute_delta(ins.polygon).delta;
    b.delta_low = b.delta_polygon;
    b.delta_high = b.delta_polygon + ins.lambda * std::tan(ins.curvature_bound * ins.lambda);
    return b;
}

} // namespace oval
