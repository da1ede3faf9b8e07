#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oval/geometry.hpp"
#include "oval/sections.hpp"

namespace testutil {

/// Random strictly convex polygon: n points in angular order on a random
/// ellipse (random axes, rotation, center). Angle gaps are bounded away
/// from zero so vertices never collide.
inline oval::ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> gaps(static_cast<size_t>(n));
    double total = 0.0;
    for (double& g : gaps) {
        g = 0.15 + unit(rng);
        total += g;
    }
    double a = 0.5 + 1.5 * unit(rng);
    double b = 0.5 + 1.5 * unit(rng);
    double phi = 2.0 * std::numbers::pi * unit(rng);
    double cx = 10.0 * (unit(rng) - 0.5);
    double cy = 10.0 * (unit(rng) - 0.5);

    std::vector<oval::Point> verts;
    double angle = 2.0 * std::numbers::pi * unit(rng);
    for (int i = 0; i < n; ++i) {
        angle += 2.0 * std::numbers::pi * gaps[static_cast<size_t>(i)] / total;
        double ex = a * std::cos(angle), ey = b * std::sin(angle);
        verts.push_back({cx + ex * std::cos(phi) - ey * std::sin(phi),
                         cy + ex * std::sin(phi) + ey * std::cos(phi)});
    }
    return oval::validate_polygon(verts);
}

inline oval::ConvexPolygon transformed(const oval::ConvexPolygon& P, double angle, double tx,
                                       double ty, double scale = 1.0) {
    std::vector<oval::Point> verts;
    double c = std::cos(angle), s = std::sin(angle);
    for (const oval::Point& v : P.vertices)
        verts.push_back({scale * (c * v.x - s * v.y) + tx, scale * (s * v.x + c * v.y) + ty});
    return oval::validate_polygon(verts);
}

inline oval::ConvexPolygon unit_square() {
    return oval::validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline oval::ConvexPolygon equilateral() {
    return oval::validate_polygon({{-1, 0}, {1, 0}, {0, std::sqrt(3.0)}});
}

inline oval::ConvexPolygon normalized_triangle(double x, double y) {
    return oval::validate_polygon({{-1, 0}, {1, 0}, {x, y}});
}

inline oval::ConvexPolygon regular_polygon(int n, double radius = 1.0) {
    std::vector<oval::Point> verts;
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * std::numbers::pi * i / n;
        verts.push_back({radius * std::cos(th), radius * std::sin(th)});
    }
    return oval::validate_polygon(verts);
}

/// Max over all chords and m boundary samples q of d(p0, q) - delta.
/// Distinguished chords must keep this below the coincidence tolerance.
inline double chord_max_excess(const oval::ConvexPolygon& P, const oval::DeltaReport& rep,
                               int m = 10000) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const oval::DistinguishedChord& c : rep.chords)
        for (int i = 0; i < m; ++i) {
            double s = P.perimeter * i / m;
            oval::Point q = oval::point_at_arclength(P, s).point;
            worst = std::max(worst, oval::dist(c.p0.point, q) - rep.delta);
        }
    return worst;
}

class TempFile {
public:
    explicit TempFile(const std::string& content, const std::string& suffix = ".txt") {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("oval_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                  suffix))
                    .string();
        std::ofstream out(path_);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace testutil
