#include "oval/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oval/parallel.hpp"

namespace oval {

namespace {

std::size_t next_pow2(std::size_t v) {
    std::size_t p = 1;
    while (p < v) p <<= 1;
    return p;
}

} // namespace

OracleResult delta_bruteforce(const ConvexPolygon& P, double samples_per_unit,
                              std::size_t sample_cap) {
    if (!(samples_per_unit > 0.0))
        throw ValidationError("samples_per_unit must be positive");

    const int n = P.size();
    std::vector<std::size_t> counts(static_cast<size_t>(n));
    std::size_t total = 0;
    double max_gap = 0.0;
    for (int e = 0; e < n; ++e) {
        double len = P.edge_length(e);
        auto want = static_cast<std::size_t>(std::ceil(len * samples_per_unit));
        std::size_t k = next_pow2(std::max<std::size_t>(1, want));
        counts[static_cast<size_t>(e)] = k;
        total += k;
        max_gap = std::max(max_gap, len / static_cast<double>(k));
    }
    if (total > sample_cap)
        throw ValidationError("sample budget exceeded: " + std::to_string(total) +
                              " > cap " + std::to_string(sample_cap));

    struct EdgeMin {
        double mu = 0.0;
        double s = 0.0;
    };
    std::vector<EdgeMin> mins(static_cast<size_t>(n));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t ei) {
        int e = static_cast<int>(ei);
        Point a = P.vertex(e), b = P.vertex(e + 1);
        double len = P.edge_length(e);
        std::size_t k = counts[ei];
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < k; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(k);
            double m = mu(P, lerp(a, b, t));
            if (m < best) {
                best = m;
                best_i = i;
            }
        }
        mins[ei] = {best, P.cum_arclength[ei] +
                              len * static_cast<double>(best_i) / static_cast<double>(k)};
    });

    OracleResult r;
    r.upper = std::numeric_limits<double>::infinity();
    for (const EdgeMin& em : mins) { // index-ordered reduction
        if (em.mu < r.upper) {
            r.upper = em.mu;
            r.argmin_s = em.s;
        }
    }
    r.max_gap = max_gap;
    r.lower = r.upper - max_gap / 2.0;
    r.samples = total;
    return r;
}

std::vector<std::pair<double, double>> mu_profile(const ConvexPolygon& P, std::size_t m) {
    if (m < static_cast<std::size_t>(P.size()))
        throw ValidationError("profile needs at least one sample per vertex");
    std::vector<std::pair<double, double>> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        double s = P.perimeter * static_cast<double>(i) / static_cast<double>(m);
        out.emplace_back(s, mu(P, point_at_arclength(P, s).point));
    }
    return out;
}

} // namespace oval
