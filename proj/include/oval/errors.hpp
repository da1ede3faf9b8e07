#pragma once

#include <stdexcept>
#include <string>

namespace oval {

/// Invalid input: nonconvex polygons, malformed files, bad parameters.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg, int index = -1)
        : std::runtime_error(msg), index(index) {}

    /// Offending vertex/line index when one exists, -1 otherwise.
    int index;
};

/// Numerically coincident section points that survived the tolerance-halving
/// retry; carries the boundary arclength where the ambiguity was detected.
class DegeneracyError : public std::runtime_error {
public:
    DegeneracyError(const std::string& msg, double arclength)
        : std::runtime_error(msg), arclength(arclength) {}

    double arclength;
};

/// Inscribed polygon too coarse for the two-sided invariant bound
/// (lambda >= pi/(2k)); carries the smallest vertex count that would do.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(const std::string& msg, double lambda, double bound, int min_vertex_count)
        : std::runtime_error(msg), lambda(lambda), bound(bound),
          min_vertex_count(min_vertex_count) {}

    double lambda;
    double bound;
    int min_vertex_count;
};

} // namespace oval
