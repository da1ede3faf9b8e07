#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oval/geometry.hpp"
#include "oval/sections.hpp"
#include "oval/support_curve.hpp"

namespace oval {

/// Polygon file: one vertex per line, two numbers separated by whitespace,
/// lines whose first non-space character is '#' are ignored. Vertex order
/// follows the boundary in either orientation.
ConvexPolygon parse_polygon_file(const std::string& path);
std::vector<Point> parse_polygon_text(std::istream& in, const std::string& origin);

/// Curve descriptor: `a0 = <val>` plus lines `cos <m> <val>` / `sin <m> <val>`.
SupportCurve parse_curve_file(const std::string& path);
SupportCurve parse_curve_text(std::istream& in, const std::string& origin);

/// Fixed formatting used everywhere a value is reported: nine decimals.
std::string format_fixed(double v);
/// Compact deterministic formatting for SVG coordinates.
std::string format_compact(double v);

/// FNV-1a digest of the canonicalized vertex list, hex string.
std::string polygon_digest(const ConvexPolygon& P);

/// Ordered key/value run report, rendered either as `key = value` lines or
/// as a single JSON object with the same field order.
class RunReport {
public:
    void add_text(const std::string& key, const std::string& value);
    void add_number(const std::string& key, double value);
    void add_integer(const std::string& key, long long value);
    void add_flag(const std::string& key, bool value);
    void add_chords(const std::vector<DistinguishedChord>& chords);

    std::string to_text() const;
    std::string to_json() const;

private:
    enum class Kind { Text, Number, Integer, Flag, Chords };
    struct Entry {
        Kind kind;
        std::string key;
        std::string text;
        double number = 0.0;
        long long integer = 0;
        bool flag = false;
    };
    std::vector<Entry> entries_;
    std::vector<DistinguishedChord> chords_;
};

/// SVG figure: polygon outline, section points as x-shaped crosses,
/// distinguished chords dashed. Deterministic bytes for identical inputs.
std::string render_svg(const ConvexPolygon& P, const DeltaReport& report);
void emit_svg(const ConvexPolygon& P, const DeltaReport& report, const std::string& out_path);

} // namespace oval
