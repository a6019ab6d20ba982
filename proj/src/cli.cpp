#include "heis/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "heis/curvature.hpp"
#include "heis/geodesics.hpp"
#include "heis/measure.hpp"
#include "heis/minkowski_iso.hpp"
#include "heis/sr_metric.hpp"

namespace heis::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Shortest decimal form that round-trips.
std::string format_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

Json number_or_null(double value)
{
    return std::isfinite(value) ? Json(value) : Json(nullptr);
}

Event event_from(const std::vector<double>& coords, std::size_t offset)
{
    return {coords[offset], coords[offset + 1], coords[offset + 2]};
}

void write_curve_csv(std::ostream& os, const std::vector<double>& times, const std::vector<std::vector<double>>& rows,
                     const std::string& header)
{
    os << header << '\n';
    for (std::size_t i = 0; i < times.size(); ++i) {
        os << format_number(times[i]);
        for (double v : rows[i]) {
            os << ',' << format_number(v);
        }
        os << '\n';
    }
}

struct Options {
    std::vector<double> coords;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t mc = 0;
    std::vector<double> center{0.0, 0.0, 0.0};
    double radius = 1.0;
    double delta = 0.1;
    std::size_t halvings = 3;
    std::vector<double> t_values{0.25, 0.5, 0.75};
    std::vector<double> N_values{1.0, 2.0, 5.0, 10.0};
    double w_max = 200.0;
    double step = 1e-5;
    std::string output;
};

void add_points(CLI::App* sub, Options& opt, std::size_t count, const std::string& names)
{
    sub->add_option("coords", opt.coords, names)->required()->expected(static_cast<int>(count));
}

void add_output(CLI::App* sub, Options& opt)
{
    sub->add_option("-o,--output", opt.output, "Write the result to this file instead of stdout");
}

void cmd_iso_solve(const Options& opt, std::ostream& out)
{
    const IsoProblem prob{opt.coords[0], opt.coords[1], opt.coords[2]};
    const IsoSolution sol = solve(prob);
    if (sol.kind == IsoCase::empty) {
        throw NoSolutionError("iso-solve: no causal curve reaches (a, b) with area c");
    }
    if (opt.samples > 0) {
        const PlanarCurve curve = sample_solution(sol, prob, opt.samples);
        std::vector<std::vector<double>> rows;
        for (const PlanarPoint& p : curve.points) {
            rows.push_back({p.x, p.y});
        }
        write_curve_csv(out, curve.times, rows, "t,x,y");
        return;
    }
    Json j;
    j["case"] = to_string(sol.kind);
    j["T"] = sol.T;
    j["y_C"] = sol.y_C ? Json(*sol.y_C) : Json(nullptr);
    j["max_length"] = sol.max_length;
    if (sol.boost) {
        j["boost"] = {{"a", sol.boost->a}, {"b", sol.boost->b}, {"T", sol.boost->T}};
    } else {
        j["boost"] = nullptr;
    }
    out << j.dump(2) << '\n';
}

void cmd_tau(const Options& opt, std::ostream& out)
{
    out << Json(tau(event_from(opt.coords, 0), event_from(opt.coords, 3))).dump() << '\n';
}

void cmd_geodesic(const Options& opt, std::ostream& out)
{
    const GeodesicPath path =
        geodesic_between(event_from(opt.coords, 0), event_from(opt.coords, 3), opt.samples == 0 ? 65 : opt.samples);
    std::vector<std::vector<double>> rows;
    for (const Event& e : path.samples.points) {
        rows.push_back({e.x, e.y, e.z});
    }
    write_curve_csv(out, path.samples.times, rows, "t,x,y,z");
}

void cmd_diamond_volume(const Options& opt, std::ostream& out)
{
    const Event p = event_from(opt.coords, 0);
    const Event q = event_from(opt.coords, 3);
    Json j;
    j["closed"] = diamond_volume_closed(p, q);
    if (opt.mc > 0) {
        const VolumeEstimate est = diamond_volume_mc(p, q, opt.mc, opt.seed);
        j["mc"] = est.value;
        j["stderr"] = est.std_error;
    } else {
        j["mc"] = nullptr;
        j["stderr"] = nullptr;
    }
    j["samples"] = opt.mc;
    j["seed"] = opt.seed;
    out << j.dump(2) << '\n';
}

void cmd_hausdorff(const Options& opt, std::ostream& out)
{
    if (opt.center.size() != 3) {
        throw std::invalid_argument("hausdorff: --center takes three coordinates");
    }
    const Event center = event_from(opt.center, 0);
    std::vector<double> deltas;
    for (std::size_t k = 0; k <= opt.halvings; ++k) {
        deltas.push_back(opt.delta / std::pow(2.0, static_cast<double>(k)));
    }
    const std::size_t samples = opt.samples == 0 ? 100000 : opt.samples;
    const DimensionProbe probe = dimension_probe(center, opt.radius, {3.0, 4.0, 5.0}, deltas, opt.seed, samples);
    const HausdorffBounds first = hausdorff_bounds(center, opt.radius, deltas.front(), opt.seed, samples);
    out << "delta,lower,upper,d3,d4,d5\n";
    for (const DimensionProbeRow& row : probe.rows) {
        out << format_number(row.delta) << ',' << format_number(first.lower) << ',' << format_number(row.sums[1])
            << ',' << format_number(row.sums[0]) << ',' << format_number(row.sums[1]) << ','
            << format_number(row.sums[2]) << '\n';
    }
}

void cmd_diamond_box(const Options& opt, std::ostream& out)
{
    const std::size_t samples = opt.samples == 0 ? 10000 : opt.samples;
    const DiamondBoxReport report =
        diamond_in_box_check(event_from(opt.coords, 0), event_from(opt.coords, 3), samples, opt.seed);
    const InnerRadius inner = unit_diamond_inner_radius();
    Json j;
    j["inclusion_pass"] = report.inclusion_pass;
    j["samples"] = report.samples;
    j["rho"] = inner.rho;
    j["D"] = 1.0 / inner.rho;
    j["C_estimate"] = ball_box_constant();
    j["box_side"] = report.box_side;
    j["distance"] = report.distance;
    j["sharp_box_violations"] = report.sharp_box_violations;
    j["distance_box_violations"] = report.distance_box_violations;
    out << j.dump(2) << '\n';
}

void cmd_curvature_check(const Options& opt, std::ostream& out)
{
    const MidpointReport mid = midpoint_det_check(opt.step);
    Json j;
    j["midpoint_det"] = mid.numeric;
    j["midpoint_analytic"] = mid.analytic;
    j["inversion_det"] = mid.inversion_det;
    j["juillet_bound"] = mid.juillet_bound;
    j["bm_rhs"] = mid.bm_rhs;
    j["contradiction"] = mid.contradiction;
    j["message"] = mid.message;
    Json witnesses = Json::array();
    for (double t : opt.t_values) {
        for (double N : opt.N_values) {
            const TmcpReport r = tmcp_violation_report(t, N, opt.w_max);
            witnesses.push_back({{"t", t},
                                 {"N", N},
                                 {"found", r.found},
                                 {"w", r.witness_w ? Json(*r.witness_w) : Json(nullptr)},
                                 {"ratio", number_or_null(r.ratio)},
                                 {"bound", r.bound},
                                 {"note", r.note}});
        }
    }
    j["tmcp_witnesses"] = witnesses;
    Json scan = Json::array();
    for (double w : {-50.0, -30.0, -20.0, -10.0, -5.0, 0.0, 5.0, 10.0, 20.0, 30.0, 50.0}) {
        if (std::abs(w) <= opt.w_max) {
            scan.push_back({{"w", w}, {"value", unit_diamond_volume(w)}});
        }
    }
    j["appendix_scan"] = scan;
    out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sub-Lorentzian Heisenberg group toolkit", "heis_slor"};
    app.require_subcommand(1);
    Options opt;
    std::function<void(const Options&, std::ostream&)> action;

    auto* iso = app.add_subcommand("iso-solve", "Maximize Lorentzian length from (0,0) to (a,b) with area c");
    add_points(iso, opt, 3, "a b c");
    iso->add_option("--samples", opt.samples, "Emit the maximizer as CSV t,x,y with this many samples")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    add_output(iso, opt);
    iso->callback([&] { action = cmd_iso_solve; });

    auto* tau_cmd = app.add_subcommand("tau", "Time separation tau(p, q)");
    add_points(tau_cmd, opt, 6, "px py pz qx qy qz");
    add_output(tau_cmd, opt);
    tau_cmd->callback([&] { action = cmd_tau; });

    auto* geo = app.add_subcommand("geodesic", "Sample the maximizing geodesic from p to q as CSV t,x,y,z");
    add_points(geo, opt, 6, "px py pz qx qy qz");
    geo->add_option("--samples", opt.samples, "Number of samples (default 65)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    add_output(geo, opt);
    geo->callback([&] { action = cmd_geodesic; });

    auto* vol = app.add_subcommand("diamond-volume", "Volume of the causal diamond J(p, q)");
    add_points(vol, opt, 6, "px py pz qx qy qz");
    vol->add_option("--mc", opt.mc, "Monte Carlo sample count (0 disables)");
    vol->add_option("--seed", opt.seed, "Random seed");
    add_output(vol, opt);
    vol->callback([&] { action = cmd_diamond_volume; });

    auto* haus = app.add_subcommand("hausdorff", "Bounds on the 4-dimensional delta pre-measure of a ball");
    haus->add_option("--center", opt.center, "Ball center x y z")->expected(3);
    haus->add_option("--radius", opt.radius, "Ball radius")->required();
    haus->add_option("--delta", opt.delta, "Largest delta; smaller rows halve it")->required();
    haus->add_option("--halvings", opt.halvings, "Number of delta halvings (default 3)");
    haus->add_option("--samples", opt.samples, "Net sample count (default 100000)");
    haus->add_option("--seed", opt.seed, "Random seed");
    add_output(haus, opt);
    haus->callback([&] { action = cmd_hausdorff; });

    auto* box = app.add_subcommand("diamond-box", "Check J(p, q) against Box(a) and Box(d(p, q))");
    add_points(box, opt, 6, "px py pz qx qy qz");
    box->add_option("--samples", opt.samples, "Number of diamond samples (default 10000)");
    box->add_option("--seed", opt.seed, "Random seed");
    add_output(box, opt);
    box->callback([&] { action = cmd_diamond_box; });

    auto* curv = app.add_subcommand("curvature-check", "Midpoint determinant, TMCP witnesses and volume decay");
    curv->add_option("--t", opt.t_values, "Values of t in (0, 1)");
    curv->add_option("--N", opt.N_values, "Values of N >= 1");
    curv->add_option("--wmax", opt.w_max, "Largest |w| searched (default 200)");
    curv->add_option("--step", opt.step, "Finite-difference step (default 1e-5)");
    add_output(curv, opt);
    curv->callback([&] { action = cmd_curvature_check; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opt.output.empty()) {
            action(opt, out);
        } else {
            std::ofstream file(opt.output);
            if (!file) {
                err << "error: cannot open " << opt.output << '\n';
                return kExitUsage;
            }
            action(opt, file);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace heis::cli
