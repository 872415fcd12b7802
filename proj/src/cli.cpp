#include "isacsim/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "isacsim/coverage.hpp"
#include "isacsim/drr.hpp"
#include "isacsim/errors.hpp"
#include "isacsim/svg.hpp"
#include "isacsim/units.hpp"
#include "isacsim/validate.hpp"

namespace isacsim {

namespace {

double case_power_ratio(const NetworkParams& net, double alpha_v) {
    NetworkParams n = net;
    n.drv.path_loss_exponent = alpha_v;
    return power_ratio_w(n);
}

// Boundary sampled along rays from the DRV anchor, so every method shares
// the exact contour's theta parametrization and same-theta rows are directly
// comparable across methods.
std::vector<Point2> shape_boundary(const SensingShape& shape, Point2 anchor, int n) {
    if (const BoundaryPolyline* p = std::get_if<BoundaryPolyline>(&shape)) return p->points();

    // reduce either analytic shape to a unit circle in its own frame
    Point2 center;
    double s1 = 0.0, s2 = 0.0, rot = 0.0;
    if (const Circle* c = std::get_if<Circle>(&shape)) {
        center = c->center;
        s1 = s2 = c->radius;
    } else {
        const Ellipse& e = std::get<Ellipse>(shape);
        center = e.center;
        s1 = e.s1;
        s2 = e.s2;
        rot = e.rotation;
    }
    const double cr = std::cos(rot), sr = std::sin(rot);
    auto to_unit = [&](Point2 p) -> Point2 {
        const Point2 q = p - center;
        return {(cr * q.x + sr * q.y) / s1, (-sr * q.x + cr * q.y) / s2};
    };

    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    const Point2 q0 = to_unit(anchor);
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * kPi * k / n;
        const Point2 dir{std::cos(theta), std::sin(theta)};
        const Point2 qd{(cr * dir.x + sr * dir.y) / s1, (-sr * dir.x + cr * dir.y) / s2};
        // |q0 + r qd| = 1, anchor inside => one positive root
        const double aa = dot(qd, qd);
        const double bb = 2.0 * dot(q0, qd);
        const double cc = dot(q0, q0) - 1.0;
        const double disc = bb * bb - 4.0 * aa * cc;
        if (!(cc < 0.0) || !(disc > 0.0))
            throw NumericError("coverage boundary sampling: the DRV anchor lies outside the "
                               "approximate shape");
        const double r = (-bb + std::sqrt(disc)) / (2.0 * aa);
        pts.push_back({anchor.x + r * dir.x, anchor.y + r * dir.y});
    }
    return pts;
}

void append_boundary_rows(ResultTable& t, const std::string& case_name,
                          const std::string& method, const std::vector<Point2>& pts) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(pts.size());
        t.row().str(case_name).str(method).num(theta).num(pts[k].x).num(pts[k].y).done();
    }
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open for writing: " + path.string());
    f << content;
}

std::string fmt_note(double u_lo, double u_hi) {
    char line[160];
    std::snprintf(line, sizeof(line),
                  "note: analytic xi decreases between u = %.6g and u = %.6g m/s "
                  "(dwell-probability decay outweighs the rate gain)\n",
                  u_lo, u_hi);
    return line;
}

} // namespace

CoverageOutputs build_coverage_outputs(const ExperimentConfig& cfg) {
    if (cfg.coverage_cases.empty())
        throw ConfigError("coverage command requires at least one coverage case");

    CoverageOutputs out{ResultTable({"case", "method", "theta", "x", "y"}),
                        ResultTable({"case", "method", "area_m2", "iou", "max_residual"}),
                        {},
                        {}};
    char line[256];

    for (const CoverageCase& cc : cfg.coverage_cases) {
        const double alpha_hat = cc.alpha_b / cc.alpha_v;
        const double w = case_power_ratio(cfg.net, cc.alpha_v);
        const BoundaryPolyline exact = exact_boundary(w, alpha_hat, cc.d_v, cc.n_angles);
        const double beta = mmse_beta(alpha_hat, cc.d_v);
        const Circle circle = circle_approximation(w, beta, cc.d_v);

        struct Method {
            std::string name;
            SensingShape shape;
        };
        std::vector<Method> methods;
        methods.push_back({"exact", exact});
        methods.push_back({"circle", circle});
        if (alpha_hat < 1.0) {
            const Point2 anchor = cc.expansion_point.value_or(Point2{cc.d_v, 0.0});
            methods.push_back({"conic_expansion",
                               conic_to_ellipse(taylor_conic(w, alpha_hat, cc.d_v, anchor,
                                                             ConicMode::kExpansion))});
            methods.push_back({"conic_published",
                               conic_to_ellipse(taylor_conic(w, alpha_hat, cc.d_v, anchor,
                                                             ConicMode::kPublished))});
        }

        SvgPlot plot("sensing boundary: " + cc.name, "x [m]", "y [m]");
        const char* colors[] = {"black", "#1f77b4", "#2ca02c", "#d62728"};
        const Point2 drv_anchor{cc.d_v, 0.0};
        for (std::size_t m = 0; m < methods.size(); ++m) {
            const auto pts = shape_boundary(methods[m].shape, drv_anchor, cc.n_angles);
            append_boundary_rows(out.boundaries, cc.name, methods[m].name, pts);
            plot.add_polyline(pts, colors[m % 4], methods[m].name, true);

            const double area = shape_area(methods[m].shape);
            double iou = 1.0, resid = 0.0;
            if (methods[m].name != "exact") {
                const CoverageResult res =
                    make_coverage_result(exact, methods[m].shape, w, alpha_hat, cc.d_v);
                iou = res.iou;
                resid = res.max_boundary_residual;
            }
            out.summary.row().str(cc.name).str(methods[m].name).num(area).num(iou).num(resid).done();
            std::snprintf(line, sizeof(line), "%s/%s: area = %.6g m^2, iou = %.4f, max_residual = %.3g\n",
                          cc.name.c_str(), methods[m].name.c_str(), area, iou, resid);
            out.log += line;
        }
        if (alpha_hat >= 1.0)
            out.log += cc.name + ": conic methods skipped (alpha_hat = 1, the circle is exact)\n";
        out.svgs.emplace_back("coverage_" + cc.name + ".svg",
                              plot.render(cfg.seed, cfg.config_hash));
    }
    return out;
}

SweepOutputs build_drr_sweep(const ExperimentConfig& cfg, int threads) {
    if (cfg.sweep.parameter.empty())
        throw ConfigError("drr-sweep command requires a sweep section in the config");

    SweepOutputs out{ResultTable({"swept_value", "xi_analytic", "xi_r_analytic",
                                  "p_dwell_analytic", "xi_empirical", "ci_low", "ci_high",
                                  "events"}),
                     {},
                     {}};

    const std::vector<double> values = sweep_values(cfg.sweep);
    std::vector<Point2> analytic_curve, empirical_pts;
    std::vector<double> ci_half;

    // A PRI sweep thresholds the same dwell sample set, so one batch serves
    // every point; other parameters change the dynamics and need a batch each.
    const bool reuse_batch = cfg.sweep.parameter == "pri";
    std::vector<RepResult> shared_batch;
    if (reuse_batch) shared_batch = run_batch(cfg.sim_config(), threads);

    for (const double v : values) {
        NetworkParams net = cfg.net;
        if (cfg.sweep.parameter == "drv_intensity")
            net.drv_intensity = v;
        else if (cfg.sweep.parameter == "pri")
            net.pri = v;
        else if (cfg.sweep.parameter == "speed")
            net.speed = v;
        else
            throw ConfigError("unsupported sweep parameter: " + cfg.sweep.parameter);

        const double w = power_ratio_w(net);
        const double xi_r = ranging_repetition_rate(w, net.bs_intensity, net.drv_intensity,
                                                    net.speed, net.pause_mean);
        const double p_dwell = dwell_exceed_probability(w, net.bs_intensity, net.speed, net.pri);
        const double xi = xi_r * p_dwell;

        SimConfig sim = cfg.sim_config();
        sim.net = net;
        SimReport rep;
        if (reuse_batch)
            rep = aggregate(sim, shared_batch, net.pri);
        else
            rep = estimate(sim, threads);

        out.table.row()
            .num(v)
            .num(xi)
            .num(xi_r)
            .num(p_dwell)
            .num(rep.empirical_xi)
            .num(rep.empirical_xi - rep.xi_ci)
            .num(rep.empirical_xi + rep.xi_ci)
            .integer(rep.event_count)
            .done();
        analytic_curve.push_back({v, xi});
        empirical_pts.push_back({v, rep.empirical_xi});
        ci_half.push_back(rep.xi_ci);

        char line[200];
        std::snprintf(line, sizeof(line),
                      "%s = %.6g: analytic xi = %.6g, empirical xi = %.6g (+-%.2g), events = %llu\n",
                      cfg.sweep.parameter.c_str(), v, xi, rep.empirical_xi, rep.xi_ci,
                      static_cast<unsigned long long>(rep.event_count));
        out.log += line;
    }

    // The closed form is not globally monotone in speed (the dwell factor
    // decays as exp(-c u^2 tau^2)); call it out instead of asserting it away.
    if (cfg.sweep.parameter == "speed") {
        for (std::size_t i = 1; i < analytic_curve.size(); ++i) {
            if (analytic_curve[i].y < analytic_curve[i - 1].y) {
                out.log += fmt_note(analytic_curve[i - 1].x, analytic_curve[i].x);
                break;
            }
        }
    }

    SvgPlot plot("dynamic ranging rate vs " + cfg.sweep.parameter, cfg.sweep.parameter,
                 "xi [events/s]");
    plot.add_polyline(analytic_curve, "#1f77b4", "analytic");
    plot.add_error_bars(empirical_pts, ci_half, "#d62728");
    plot.add_points(empirical_pts, "#d62728", "empirical (95% CI)");
    out.svg = plot.render(cfg.seed, cfg.config_hash);
    return out;
}

int cmd_coverage(const ExperimentConfig& cfg) {
    const auto out = build_coverage_outputs(cfg);
    const std::filesystem::path dir(cfg.output_dir);
    std::filesystem::create_directories(dir);
    out.boundaries.write_csv((dir / "coverage_boundaries.csv").string(), cfg.seed,
                             cfg.config_hash);
    out.summary.write_csv((dir / "coverage_summary.csv").string(), cfg.seed, cfg.config_hash);
    for (const auto& [name, content] : out.svgs) write_text(dir / name, content);
    std::cout << out.log;
    return 0;
}

int cmd_drr_sweep(const ExperimentConfig& cfg, int threads) {
    const auto out = build_drr_sweep(cfg, threads);
    const std::filesystem::path dir(cfg.output_dir);
    std::filesystem::create_directories(dir);
    out.table.write_csv((dir / "drr_sweep.csv").string(), cfg.seed, cfg.config_hash);
    write_text(dir / "drr_sweep.svg", out.svg);
    std::cout << out.log;
    return 0;
}

int cmd_validate(const ExperimentConfig& cfg, int threads) {
    const ValidationReport report = run_acceptance(cfg, threads);
    const std::filesystem::path dir(cfg.output_dir);
    std::filesystem::create_directories(dir);
    write_text(dir / "validation_report.txt", report.text);
    std::cout << report.text;
    return report.all_pass ? 0 : 3;
}

} // namespace isacsim
