#include "oval/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>

#include "oval/io.hpp"
#include "oval/moduli.hpp"
#include "oval/oracle.hpp"
#include "oval/sections.hpp"
#include "oval/support_curve.hpp"

namespace oval {

namespace {

class Timer {
public:
    double ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_polygon_report(RunReport& rr, const ConvexPolygon& P, const DeltaReport& rep,
                        bool with_chords) {
    rr.add_text("digest", polygon_digest(P));
    rr.add_integer("n_vertices", P.size());
    rr.add_number("perimeter", P.perimeter);
    rr.add_number("diameter", P.diam);
    rr.add_number("delta", rep.delta);
    rr.add_number("quotient", rep.quotient);
    rr.add_integer("n_section_points",
                   static_cast<long long>(rep.decomposition.section_points.size()));
    rr.add_integer("n_sections", static_cast<long long>(rep.decomposition.sections.size()));
    rr.add_integer("n_refined_sections",
                   static_cast<long long>(rep.decomposition.refined.size()));
    rr.add_integer("n_chords", static_cast<long long>(rep.chords.size()));
    rr.add_flag("upper_bound_ok", rep.perimeter_le_two_pi_delta);
    rr.add_flag("conjectured_lower_ok", rep.perimeter_ge_pi_delta);
    rr.add_flag("degenerate", rep.decomposition.degenerate_bisector);
    if (with_chords) rr.add_chords(rep.chords);
}

} // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimax invariant of convex curves: delta, distinguished chords, bounds"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a single JSON object instead of key = value lines");

    std::string poly_path, curve_path, out_path;
    double spacing = 1e-4;
    int approx_n = 64, quadrature = 2048, grid = 200, restarts = 64, iters = 300;
    std::uint64_t seed = 1;

    auto* c_delta = app.add_subcommand("delta", "invariant of a polygon file");
    c_delta->add_option("file", poly_path, "polygon file")->required();
    auto* c_chords = app.add_subcommand("chords", "invariant and all distinguished chords");
    c_chords->add_option("file", poly_path, "polygon file")->required();
    auto* c_oracle = app.add_subcommand("oracle", "certified brute-force interval");
    c_oracle->add_option("file", poly_path, "polygon file")->required();
    c_oracle->add_option("--spacing", spacing, "max arclength spacing between samples")
        ->required();
    auto* c_approx = app.add_subcommand("approx", "two-sided bounds for a smooth curve");
    c_approx->add_option("--curve", curve_path, "support-function curve file")->required();
    c_approx->add_option("--n", approx_n, "inscribed polygon vertex count")->required();
    c_approx->add_option("--quadrature", quadrature, "quadrature grid size");
    auto* c_scan = app.add_subcommand("scan-triangles", "grid scan of L/delta over triangles");
    c_scan->add_option("--grid", grid, "grid resolution per axis");
    auto* c_quads = app.add_subcommand("search-quads", "search for the minimal quadrangle quotient");
    c_quads->add_option("--seed", seed, "random seed");
    c_quads->add_option("--restarts", restarts, "number of restarts");
    c_quads->add_option("--iters", iters, "iterations per restart");
    auto* c_kite = app.add_subcommand("kite", "the extremal kite quadrangle");
    auto* c_square = app.add_subcommand("square", "the unit square");
    auto* c_svg = app.add_subcommand("svg", "figure with section points and chords");
    c_svg->add_option("file", poly_path, "polygon file")->required();
    c_svg->add_option("-o,--output", out_path, "output SVG path")->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough(); // let --json appear after the subcommand

    std::reverse(args.begin(), args.end()); // CLI11 consumes a reversed vector
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 64;
    }

    try {
        Timer timer;
        RunReport rr;

        if (c_delta->parsed() || c_chords->parsed()) {
            bool chords = c_chords->parsed();
            rr.add_text("command", chords ? "chords" : "delta");
            rr.add_text("input", poly_path);
            ConvexPolygon P = parse_polygon_file(poly_path);
            add_polygon_report(rr, P, full_report(P), chords);
        } else if (c_oracle->parsed()) {
            rr.add_text("command", "oracle");
            rr.add_text("input", poly_path);
            if (!(spacing > 0.0)) throw ValidationError("spacing must be positive");
            ConvexPolygon P = parse_polygon_file(poly_path);
            OracleResult res = delta_bruteforce(P, 1.0 / spacing);
            rr.add_text("digest", polygon_digest(P));
            rr.add_number("spacing", spacing);
            rr.add_integer("samples", static_cast<long long>(res.samples));
            rr.add_number("max_gap", res.max_gap);
            rr.add_number("lower", res.lower);
            rr.add_number("upper", res.upper);
            rr.add_number("width", res.upper - res.lower);
            rr.add_number("argmin_s", res.argmin_s);
        } else if (c_approx->parsed()) {
            rr.add_text("command", "approx");
            rr.add_text("input", curve_path);
            SupportCurve curve = parse_curve_file(curve_path);
            CurveMetrics m = curve_metrics(curve, quadrature);
            DeltaBounds b = delta_bounds(curve, approx_n, quadrature);
            rr.add_integer("n", approx_n);
            rr.add_number("length", m.length);
            rr.add_number("curvature_bound", b.curvature_bound);
            rr.add_number("breadth_min", m.breadth_min);
            rr.add_number("breadth_max", m.breadth_max);
            rr.add_number("lambda", b.lambda);
            rr.add_number("delta_polygon", b.delta_polygon);
            rr.add_number("delta_low", b.delta_low);
            rr.add_number("delta_high", b.delta_high);
            rr.add_number("quotient_low", m.length / b.delta_high);
            rr.add_number("quotient_high", m.length / b.delta_low);
        } else if (c_scan->parsed()) {
            rr.add_text("command", "scan-triangles");
            TriangleScanResult res = triangle_scan(grid);
            rr.add_integer("grid", grid);
            rr.add_integer("evaluated", static_cast<long long>(res.evaluated));
            rr.add_number("min_quotient", res.min_quotient);
            rr.add_number("argmin_x", res.argmin_x);
            rr.add_number("argmin_y", res.argmin_y);
            rr.add_number("cross_check_max_gap", res.max_closed_form_gap);
            rr.add_flag("upper_bound_ok", res.upper_bound_ok);
        } else if (c_quads->parsed()) {
            rr.add_text("command", "search-quads");
            QuadrangleSearchResult res = quadrangle_search(seed, restarts, iters);
            rr.add_integer("seed", static_cast<long long>(seed));
            rr.add_integer("restarts", restarts);
            rr.add_integer("iters", iters);
            rr.add_integer("evaluations", static_cast<long long>(res.evaluations));
            rr.add_integer("skipped", static_cast<long long>(res.skipped));
            rr.add_number("best_quotient", res.best_quotient);
            rr.add_number("best_u0", res.best_params[0]);
            rr.add_number("best_u", res.best_params[1]);
            rr.add_number("best_v0", res.best_params[2]);
            rr.add_number("best_v", res.best_params[3]);
            rr.add_number("kite_quotient", kite_quotient(kite_minimize()));
        } else if (c_kite->parsed()) {
            rr.add_text("command", "kite");
            ConvexPolygon P = magic_kite();
            add_polygon_report(rr, P, full_report(P), true);
        } else if (c_square->parsed()) {
            rr.add_text("command", "square");
            ConvexPolygon P =
                validate_polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
            add_polygon_report(rr, P, full_report(P), true);
        } else if (c_svg->parsed()) {
            rr.add_text("command", "svg");
            rr.add_text("input", poly_path);
            ConvexPolygon P = parse_polygon_file(poly_path);
            DeltaReport rep = full_report(P);
            emit_svg(P, rep, out_path);
            rr.add_text("output", out_path);
            rr.add_integer("n_section_points",
                           static_cast<long long>(rep.decomposition.section_points.size()));
            rr.add_integer("n_chords", static_cast<long long>(rep.chords.size()));
        }

        rr.add_number("timing_ms", timer.ms());
        out << (json ? rr.to_json() : rr.to_text());
        return 0;
    } catch (const DegeneracyError& e) {
        err << "degeneracy error: " << e.what() << "\n";
        return 3;
    } catch (const HypothesisError& e) {
        err << "hypothesis violation: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace oval
