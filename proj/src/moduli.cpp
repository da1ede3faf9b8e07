#include "oval/moduli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>

#include "oval/parallel.hpp"

namespace oval {

namespace {

constexpr double kPi = std::numbers::pi;

double d4_formula(double x, double y) {
    return 0.5 * ((1.0 + x) * (1.0 + x) + y * y) / (1.0 + x);
}

} // namespace

double psi1(double x) {
    double inner = std::sqrt((9.0 - x) * (9.0 - x) - 48.0);
    return std::sqrt(0.5 * (1.0 - x)) * std::sqrt(std::max(0.0, inner - (1.0 - x)));
}

double psi3(double x) { return 1.0 + x; }

TriangleDelta triangle_delta_closed_form(double x, double y) {
    if (!(x >= -1e-12) || !(y > 0.0) || (1.0 + x) * (1.0 + x) + y * y > 4.0 + 4e-9)
        throw ValidationError("apex outside the triangle moduli set");
    x = std::max(x, 0.0);

    if (x * x + y * y <= 1.0) return {1.0, "disk"};

    double p1 = psi1(std::min(x, 1.0));
    double p3 = psi3(x);
    double d4 = d4_formula(x, y);
    if (std::abs(y - p3) <= 1e-9 && std::abs(y - d4) > 1e-9)
        throw std::logic_error("separating-curve formulas disagree");

    if (y >= p3) return {y, y >= p1 ? "I" : "II"};
    return {d4, y <= p1 ? "III" : "IV"};
}

double triangle_perimeter(double x, double y) {
    return 2.0 + std::hypot(1.0 + x, y) + std::hypot(1.0 - x, y);
}

double triangle_quotient_closed_form(double x, double y) {
    return triangle_perimeter(x, y) / triangle_delta_closed_form(x, y).delta;
}

EllipticCoords elliptic_from_cartesian(double x, double y) {
    double rp = std::hypot(1.0 + x, y);
    double rm = std::hypot(1.0 - x, y);
    return {0.5 * (rp + rm), 0.5 * (rp - rm)};
}

std::pair<double, double> cartesian_from_elliptic(double u, double v) {
    double y2 = (u * u - 1.0) * (1.0 - v * v);
    return {u * v, std::sqrt(std::max(0.0, y2))};
}

TriangleScanResult triangle_scan(int grid_n, bool cross_check) {
    if (grid_n < 50) throw ValidationError("grid must be at least 50");

    struct ColumnBest {
        double q = std::numeric_limits<double>::infinity();
        double x = 0.0, y = 0.0;
        double max_gap = 0.0;
        std::size_t evaluated = 0;
        bool bound_ok = true;
        std::optional<std::pair<double, double>> mismatch;
    };
    std::vector<ColumnBest> cols(static_cast<size_t>(grid_n));

    parallel_for(static_cast<size_t>(grid_n), [&](std::size_t i) {
        ColumnBest& cb = cols[i];
        double x = static_cast<double>(i) / grid_n;
        double ymax2 = 4.0 - (1.0 + x) * (1.0 + x);
        if (ymax2 <= 0.0) return;
        double ymax = std::sqrt(ymax2);
        for (int j = 1; j <= grid_n; ++j) {
            double y = ymax * static_cast<double>(j) / grid_n;
            TriangleDelta cf = triangle_delta_closed_form(x, y);
            double L = triangle_perimeter(x, y);
            double q = L / cf.delta;
            ++cb.evaluated;
            if (L > 2.0 * kPi * cf.delta + 1e-9) cb.bound_ok = false;
            if (cross_check) {
                ConvexPolygon T = validate_polygon({{-1.0, 0.0}, {1.0, 0.0}, {x, y}});
                double gap = std::abs(compute_delta(T).delta - cf.delta);
                cb.max_gap = std::max(cb.max_gap, gap);
                if (gap > 1e-9 && !cb.mismatch) cb.mismatch = {{x, y}};
            }
            if (q < cb.q) {
                cb.q = q;
                cb.x = x;
                cb.y = y;
            }
        }
    });

    TriangleScanResult r;
    r.min_quotient = std::numeric_limits<double>::infinity();
    for (const ColumnBest& cb : cols) {
        if (cb.mismatch)
            throw std::logic_error("closed form disagrees with the section algorithm at (" +
                                   std::to_string(cb.mismatch->first) + ", " +
                                   std::to_string(cb.mismatch->second) + ")");
        r.evaluated += cb.evaluated;
        r.max_closed_form_gap = std::max(r.max_closed_form_gap, cb.max_gap);
        r.upper_bound_ok = r.upper_bound_ok && cb.bound_ok;
        if (cb.q < r.min_quotient) {
            r.min_quotient = cb.q;
            r.argmin_x = cb.x;
            r.argmin_y = cb.y;
        }
    }
    return r;
}

double kite_quotient(double u) {
    if (!(u > 1.0 / std::sqrt(3.0)))
        throw ValidationError("kite parameter must exceed 1/sqrt(3)");
    return 4.0 * u * (u * u + 1.0) / (3.0 * u * u - 1.0);
}

double kite_v(double u) {
    if (!(u > 1.0 / std::sqrt(3.0)))
        throw ValidationError("kite parameter must exceed 1/sqrt(3)");
    return u * (3.0 - u * u) / (3.0 * u * u - 1.0);
}

double kite_minimize() {
    // golden-section bracketing on the unimodal stretch of f, then bisection
    // on the sign of f' (numerator 4(3u^4 - 6u^2 - 1)/(3u^2 - 1)^2), which is
    // immune to the sqrt(eps) floor of value-comparison searches
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.7, b = 3.0;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = kite_quotient(c), fd = kite_quotient(d);
    while (b - a > 1e-3) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = kite_quotient(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = kite_quotient(d);
        }
    }
    auto slope = [](double u) { return 3.0 * u * u * u * u - 6.0 * u * u - 1.0; };
    a -= 1e-3;
    b += 1e-3;
    while (b - a > 1e-14) {
        double m = 0.5 * (a + b);
        (slope(m) < 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

ConvexPolygon magic_kite() {
    double r3 = std::sqrt(3.0);
    double top = std::sqrt(3.0 + 2.0 * r3) / r3;
    double bottom = std::sqrt(2.0 * r3 - 3.0) / 3.0;
    return validate_polygon({{-1.0, 0.0}, {0.0, -bottom}, {1.0, 0.0}, {0.0, top}});
}

namespace {

/// Quotient of the quadrangle B(-1,0), C(v0,-v), E(1,0), A(u0,u), or nothing
/// when the candidate is nonconvex or (-1,0)-(1,0) is no longer a diameter.
std::optional<double> quad_objective(const std::array<double, 4>& p, std::size_t& skipped) {
    auto [u0, u, v0, v] = p;
    if (!(u > 0.0) || !(v > 0.0)) {
        ++skipped;
        return std::nullopt;
    }
    std::vector<Point> verts{{-1.0, 0.0}, {v0, -v}, {1.0, 0.0}, {u0, u}};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            if (dist(verts[a], verts[b]) > 2.0 + 1e-9) {
                ++skipped;
                return std::nullopt;
            }
    try {
        return compute_delta(validate_polygon(verts)).quotient;
    } catch (const ValidationError&) {
        ++skipped;
        return std::nullopt;
    } catch (const DegeneracyError&) {
        ++skipped;
        return std::nullopt;
    }
}

} // namespace

QuadrangleSearchResult quadrangle_search(std::uint64_t seed, int restarts, int iters) {
    if (restarts < 1 || iters < 1) throw ValidationError("restarts and iters must be positive");

    struct RestartResult {
        double q = std::numeric_limits<double>::infinity();
        std::array<double, 4> p{};
        std::size_t skipped = 0;
        std::size_t evals = 0;
    };
    std::vector<RestartResult> results(static_cast<size_t>(restarts));

    parallel_for(static_cast<size_t>(restarts), [&](std::size_t r) {
        RestartResult& rr = results[r];
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + r);
        std::uniform_real_distribution<double> off(-0.6, 0.6);
        std::uniform_real_distribution<double> height(0.1, 1.8);

        std::array<double, 4> p{0.0, 1.0, 0.0, 1.0}; // restart 0: the square
        if (r > 0) {
            for (int tries = 0; tries < 64; ++tries) {
                p = {off(rng), height(rng), off(rng), height(rng)};
                ++rr.evals;
                if (quad_objective(p, rr.skipped)) break;
            }
        }
        auto cur = quad_objective(p, rr.skipped);
        ++rr.evals;
        if (!cur) return;
        double q = *cur;

        double step = 0.25;
        for (int it = 0; it < iters && step > 1e-9; ++it) {
            double best_q = q;
            std::array<double, 4> best_p = p;
            for (int c = 0; c < 4; ++c)
                for (double sgn : {1.0, -1.0}) {
                    std::array<double, 4> cand = p;
                    cand[static_cast<size_t>(c)] += sgn * step;
                    ++rr.evals;
                    auto val = quad_objective(cand, rr.skipped);
                    if (val && *val < best_q) {
                        best_q = *val;
                        best_p = cand;
                    }
                }
            if (best_q < q) {
                q = best_q;
                p = best_p;
            } else {
                step *= 0.5;
            }
        }
        rr.q = q;
        rr.p = p;
    });

    QuadrangleSearchResult out;
    out.best_quotient = std::numeric_limits<double>::infinity();
    for (const RestartResult& rr : results) {
        out.skipped += rr.skipped;
        out.evaluations += rr.evals;
        if (rr.q < out.best_quotient) {
            out.best_quotient = rr.q;
            out.best_params = rr.p;
        }
    }
    if (!std::isfinite(out.best_quotient))
        throw ValidationError("search found no admissible quadrangle");
    auto [u0, u, v0, v] = out.best_params;
    out.best_polygon = validate_polygon({{-1.0, 0.0}, {v0, -v}, {1.0, 0.0}, {u0, u}});
    return out;
}

} // namespace oval
