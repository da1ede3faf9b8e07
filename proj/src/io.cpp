#include "oval/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace oval {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        return ch == '#';
    }
    return true;
}

[[noreturn]] void parse_fail(const std::string& origin, int lineno, const std::string& what) {
    throw ValidationError(origin + ":" + std::to_string(lineno) + ": " + what, lineno);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

} // namespace

std::vector<Point> parse_polygon_text(std::istream& in, const std::string& origin) {
    std::vector<Point> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        Point p;
        if (!(ls >> p.x >> p.y)) parse_fail(origin, lineno, "expected two coordinates");
        std::string extra;
        if (ls >> extra) parse_fail(origin, lineno, "unexpected token '" + extra + "'");
        pts.push_back(p);
    }
    return pts;
}

ConvexPolygon parse_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open polygon file: " + path);
    return validate_polygon(parse_polygon_text(in, path));
}

SupportCurve parse_curve_text(std::istream& in, const std::string& origin) {
    double a0 = 0.0;
    bool have_a0 = false;
    std::vector<Harmonic> harmonics;
    std::string line;
    int lineno = 0;
    auto harmonic_at = [&](int m) -> Harmonic& {
        for (Harmonic& h : harmonics)
            if (h.m == m) return h;
        harmonics.push_back({m, 0.0, 0.0});
        return harmonics.back();
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "a0") {
            std::string eq;
            double v = 0.0;
            if (!(ls >> eq >> v) || eq != "=") parse_fail(origin, lineno, "expected `a0 = <val>`");
            a0 = v;
            have_a0 = true;
        } else if (head == "cos" || head == "sin") {
            int m = 0;
            double v = 0.0;
            if (!(ls >> m >> v)) parse_fail(origin, lineno, "expected `" + head + " <m> <val>`");
            if (m < 2) parse_fail(origin, lineno, "harmonic index must be >= 2");
            if (head == "cos")
                harmonic_at(m).a += v;
            else
                harmonic_at(m).b += v;
        } else {
            parse_fail(origin, lineno, "unknown directive '" + head + "'");
        }
    }
    if (!have_a0) throw ValidationError(origin + ": missing `a0 = <val>` line");
    return SupportCurve(a0, std::move(harmonics));
}

SupportCurve parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open curve file: " + path);
    return parse_curve_text(in, path);
}

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

std::string format_compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string polygon_digest(const ConvexPolygon& P) {
    std::uint64_t hash = 1469598103934665603ULL;
    auto mix = [&](const char* data, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            hash ^= static_cast<unsigned char>(data[i]);
            hash *= 1099511628211ULL;
        }
    };
    char buf[80];
    for (const Point& v : P.vertices) {
        int len = std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.x, v.y);
        mix(buf, static_cast<std::size_t>(len));
    }
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

void RunReport::add_text(const std::string& key, const std::string& value) {
    entries_.push_back({Kind::Text, key, value, 0.0, 0, false});
}
void RunReport::add_number(const std::string& key, double value) {
    entries_.push_back({Kind::Number, key, {}, value, 0, false});
}
void RunReport::add_integer(const std::string& key, long long value) {
    entries_.push_back({Kind::Integer, key, {}, 0.0, value, false});
}
void RunReport::add_flag(const std::string& key, bool value) {
    entries_.push_back({Kind::Flag, key, {}, 0.0, 0, value});
}
void RunReport::add_chords(const std::vector<DistinguishedChord>& chords) {
    entries_.push_back({Kind::Chords, "chords", {}, 0.0, 0, false});
    chords_ = chords;
}

std::string RunReport::to_text() const {
    std::string out;
    for (const Entry& e : entries_) {
        switch (e.kind) {
        case Kind::Text: out += e.key + " = " + e.text + "\n"; break;
        case Kind::Number: out += e.key + " = " + format_fixed(e.number) + "\n"; break;
        case Kind::Integer: out += e.key + " = " + std::to_string(e.integer) + "\n"; break;
        case Kind::Flag: out += e.key + " = " + (e.flag ? "true" : "false") + "\n"; break;
        case Kind::Chords:
            for (std::size_t i = 0; i < chords_.size(); ++i) {
                const DistinguishedChord& c = chords_[i];
                out += "chord_" + std::to_string(i) + " = " + format_fixed(c.p0.point.x) + " " +
                       format_fixed(c.p0.point.y) + " " + std::to_string(c.q0) + " " +
                       format_fixed(c.length) + "\n";
            }
            break;
        }
    }
    return out;
}

std::string RunReport::to_json() const {
    std::string out = "{";
    bool first = true;
    auto key = [&](const std::string& k) {
        if (!first) out += ", ";
        first = false;
        out += "\"" + json_escape(k) + "\": ";
    };
    for (const Entry& e : entries_) {
        switch (e.kind) {
        case Kind::Text:
            key(e.key);
            out += "\"" + json_escape(e.text) + "\"";
            break;
        case Kind::Number:
            key(e.key);
            out += format_fixed(e.number);
            break;
        case Kind::Integer:
            key(e.key);
            out += std::to_string(e.integer);
            break;
        case Kind::Flag:
            key(e.key);
            out += e.flag ? "true" : "false";
            break;
        case Kind::Chords: {
            key("chords");
            out += "[";
            for (std::size_t i = 0; i < chords_.size(); ++i) {
                const DistinguishedChord& c = chords_[i];
                if (i > 0) out += ", ";
                out += "{\"p0\": [" + format_fixed(c.p0.point.x) + ", " +
                       format_fixed(c.p0.point.y) + "], \"s\": " + format_fixed(c.p0.s) +
                       ", \"q0\": " + std::to_string(c.q0) +
                       ", \"length\": " + format_fixed(c.length) + "}";
            }
            out += "]";
            break;
        }
        }
    }
    out += "}\n";
    return out;
}

std::string render_svg(const ConvexPolygon& P, const DeltaReport& report) {
    double min_x = P.vertices[0].x, max_x = min_x;
    double min_y = P.vertices[0].y, max_y = min_y;
    for (const Point& v : P.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    double pad_x = 0.05 * (max_x - min_x);
    double pad_y = 0.05 * (max_y - min_y);
    double stroke = 0.005 * P.diam;
    double cross = 0.015 * P.diam;

    // y is negated so the figure appears with the usual orientation
    auto X = [](double x) { return x; };
    auto Y = [](double y) { return -y; };

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    svg += format_compact(X(min_x - pad_x)) + " " + format_compact(Y(max_y + pad_y)) + " " +
           format_compact((max_x - min_x) + 2 * pad_x) + " " +
           format_compact((max_y - min_y) + 2 * pad_y) + "\">\n";

    svg += "<polygon points=\"";
    for (std::size_t i = 0; i < P.vertices.size(); ++i) {
        if (i > 0) svg += " ";
        svg += format_compact(X(P.vertices[i].x)) + "," + format_compact(Y(P.vertices[i].y));
    }
    svg += "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + format_compact(stroke) + "\"/>\n";

    auto line = [&](Point a, Point b, const std::string& extra) {
        svg += "<line x1=\"" + format_compact(X(a.x)) + "\" y1=\"" + format_compact(Y(a.y)) +
               "\" x2=\"" + format_compact(X(b.x)) + "\" y2=\"" + format_compact(Y(b.y)) +
               "\" stroke=\"black\" stroke-width=\"" + format_compact(stroke) + "\"" + extra +
               "/>\n";
    };
    for (const BoundaryPoint& bp : report.decomposition.section_points) {
        line({bp.point.x - cross, bp.point.y - cross}, {bp.point.x + cross, bp.point.y + cross},
             "");
        line({bp.point.x - cross, bp.point.y + cross}, {bp.point.x + cross, bp.point.y - cross},
             "");
    }
    std::string dash = " stroke-dasharray=\"" + format_compact(3 * stroke) + " " +
                       format_compact(2 * stroke) + "\"";
    for (const DistinguishedChord& c : report.chords)
        line(c.p0.point, P.vertex(c.q0), dash);

    svg += "</svg>\n";
    return svg;
}

void emit_svg(const ConvexPolygon& P, const DeltaReport& report, const std::string& out_path) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write SVG file: " + out_path);
    out << render_svg(P, report);
    if (!out) throw std::runtime_error("failed while writing SVG file: " + out_path);
}

} // namespace oval
