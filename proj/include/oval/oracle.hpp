#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oval/geometry.hpp"

namespace oval {

/// Certified interval around the minimax invariant from boundary sampling.
/// upper = min over samples of mu (exact at each sample by the farthest-vertex
/// property); lower = upper - h/2 with h the max arclength gap between
/// consecutive samples, valid because mu is 1-Lipschitz and every boundary
/// point is within h/2 of a sample. The Lipschitz constant is with respect
/// to the chordal metric and chord <= arc, so the arclength-based bound is
/// valid but carries a small slack on curved gaps.
struct OracleResult {
    double lower = 0.0;
    double upper = 0.0;
    double argmin_s = 0.0;  // arclength of the best sample
    std::size_t samples = 0;
    double max_gap = 0.0;   // realized max arclength spacing h
};

/// Brute-force interval for the invariant at arclength spacing
/// <= 1/samples_per_unit. Every vertex is a sample; per-edge sample counts
/// are rounded up to powers of two so halving the spacing exactly halves
/// the certified width.
OracleResult delta_bruteforce(const ConvexPolygon& P, double samples_per_unit,
                              std::size_t sample_cap = 50'000'000);

/// m arclength-uniform samples (s, mu(s)) for diagnostics and plotting.
std::vector<std::pair<double, double>> mu_profile(const ConvexPolygon& P, std::size_t m);

} // namespace oval
