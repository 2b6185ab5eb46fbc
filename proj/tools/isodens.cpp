#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "isodens/acceptance.hpp"
#include "isodens/ball.hpp"
#include "isodens/calibration.hpp"
#include "isodens/density.hpp"
#include "isodens/errors.hpp"
#include "isodens/gaussmod.hpp"
#include "isodens/oracle.hpp"
#include "isodens/strip.hpp"

namespace {

using nlohmann::json;
using namespace isodens;

int thread_cap() {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap < 1) cap = 1;
    if (const char* env = std::getenv("ISODENS_THREADS")) {
        const int requested = std::atoi(env);
        if (requested >= 1) cap = std::min(cap, requested);
    }
    return cap;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    const int workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) body(i);
        });
    for (std::thread& t : pool) t.join();
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct CsvWriter {
    std::ofstream out;

    CsvWriter(const std::string& path, const std::string& header) : out(path) {
        if (!out) throw DomainError("cannot open output file " + path);
        out << "# " << header << "\n";
    }

    void row(const std::string& label, std::initializer_list<double> cells) {
        out << label;
        for (double c : cells) out << "," << num(c);
        out << "\n";
    }
};

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

// ---- strip ----

void strip_curves(double lambda, int samples, const std::string& path, double h_min) {
    CsvWriter csv(path, "family,parameter,area,perimeter");
    const double v_max = 4.0 * strip::crossover_v0(lambda).value;
    for (int i = 1; i <= samples; ++i) {
        const double v = M_PI * static_cast<double>(i) / samples;
        csv.row("i", {v, v, strip::profile_i(v)});
    }
    for (int i = 0; i < samples; ++i) {
        const double v = M_PI + (v_max - M_PI) * static_cast<double>(i) / (samples - 1);
        csv.row("ii", {v, v, strip::profile_ii(v)});
    }
    std::vector<ProfilePoint> p3(samples), p4(samples);
    parallel_for(samples, [&](int i) {
        const double h =
            h_min + (1.0 - h_min) * static_cast<double>(i) / (samples - 1);
        p3[i] = strip::profile_iii(h, lambda);
        p4[i] = strip::profile_iv(h, lambda);
    });
    for (int i = 0; i < samples; ++i) {
        const double h =
            h_min + (1.0 - h_min) * static_cast<double>(i) / (samples - 1);
        csv.row("iii", {h, p3[i].area, p3[i].perimeter});
        csv.row("iv", {h, p4[i].area, p4[i].perimeter});
    }
}

void strip_reversing(double lambda, int samples, const std::string& path) {
    CsvWriter csv(path, "h,area,perimeter");
    for (int i = 0; i < samples; ++i) {
        const double h = 1.0 - 0.2 * static_cast<double>(i) / (samples - 1);
        const ProfilePoint p = strip::profile_iii(h, lambda);
        csv.row(num(h), {p.area, p.perimeter});
    }
}

// ---- ball ----

void ball_curves(double lambda, int samples, const std::string& path) {
    CsvWriter csv(path, "family,parameter,area,perimeter");
    if (lambda > 1.0) {
        const double v_top = 2.0 * lambda * M_PI;
        for (int i = 1; i <= samples; ++i) {
            const double v = v_top * static_cast<double>(i) / samples;
            csv.row("a", {v, v, ball::profile_a(v)});
        }
        for (int i = 1; i < samples; ++i) {
            const double alpha = M_PI * static_cast<double>(i) / samples;
            const ball::LensProfile p = ball::profile_b(alpha, lambda);
            csv.row("b", {alpha, p.area, p.perimeter});
        }
        for (int i = 0; i < samples; ++i) {
            const double v =
                lambda * M_PI +
                (v_top - lambda * M_PI) * static_cast<double>(i) / (samples - 1);
            csv.row("big", {v, v, ball::profile_big(v, lambda)});
        }
    } else {
        for (int i = 1; i <= samples; ++i) {
            const double v = lambda * M_PI * static_cast<double>(i) / samples;
            csv.row("A", {v, v, ball::profile_A(v, lambda)});
        }
        const double beta_max = M_PI - std::acos(lambda);
        for (int i = 1; i <= samples; ++i) {
            const double beta = beta_max * static_cast<double>(i) / samples;
            const ProfilePoint p = ball::profile_B(beta, lambda);
            csv.row("B", {beta, p.area, p.perimeter});
        }
        for (int i = 1; i < samples; ++i) {
            const double bh = 0.5 * M_PI * static_cast<double>(i) / samples;
            const ProfilePoint p = ball::profile_C(bh, lambda);
            csv.row("C", {bh, p.area, p.perimeter});
        }
    }
}

json ball_shapes(double lambda, int samples) {
    std::string prev;
    json transitions = json::array();
    for (int i = 1; i < samples; ++i) {
        const double alpha = M_PI * static_cast<double>(i) / samples;
        const std::string cls =
            ball::to_string(ball::profile_b(alpha, lambda).shape_class);
        if (!prev.empty() && cls != prev)
            transitions.push_back({{"alpha", alpha}, {"from", prev}, {"to", cls}});
        prev = cls;
    }
    return {{"lambda", lambda}, {"samples", samples}, {"transitions", transitions}};
}

// ---- gaussmod ----

void gaussmod_curves(int samples, const std::string& path) {
    CsvWriter csv(path, "orientation,offset,volume,perimeter,margin");
    for (int i = 0; i < samples; ++i) {
        const double y = 1.5 * static_cast<double>(i) / (samples - 1);
        const ProfilePoint p = gaussmod::horizontal_profile(y);
        csv.row("horizontal", {y, p.area, p.perimeter, gaussmod::dominance_margin(y)});
    }
    for (int i = 0; i < samples; ++i) {
        const double x = 1.5 * static_cast<double>(i) / (samples - 1);
        const ProfilePoint p = gaussmod::vertical_profile(x);
        csv.row("vertical",
                {x, p.area, p.perimeter, std::numeric_limits<double>::quiet_NaN()});
    }
}

// ---- oracle ----

json oracle_verify(const CandidateSpec& spec, int segments) {
    const CandidateGeometry g = sample_candidate(spec, segments);
    const double a = weighted_area(g.polygon, g.density);
    const double p = weighted_perimeter(g.polygon, g.density);
    double worst_snell = 0.0;
    for (const CornerSample& corner : g.corners)
        worst_snell = std::max(worst_snell, std::abs(snell_residual(corner)));
    return {{"candidate", spec.family},
            {"lambda", spec.lambda},
            {"parameter", spec.param},
            {"segments", segments},
            {"closed_form", {{"area", g.closed_form.area},
                             {"perimeter", g.closed_form.perimeter}}},
            {"oracle", {{"area", a}, {"perimeter", p}}},
            {"rel_error",
             {{"area", std::abs(a - g.closed_form.area) /
                           std::abs(g.closed_form.area)},
              {"perimeter", std::abs(p - g.closed_form.perimeter) /
                                std::abs(g.closed_form.perimeter)}}},
            {"max_snell_residual", worst_snell}};
}

json probe_to_json(const ProbeReport& r) {
    return {{"trials", r.trials},
            {"seed", r.seed},
            {"magnitude", r.magnitude},
            {"base_area", r.base_area},
            {"base_perimeter", r.base_perimeter},
            {"min_perimeter_change", r.min_perimeter_change},
            {"area_restore_failures", r.area_restore_failures}};
}

// ---- reproduce-all ----

json reproduce_all(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto at = [&](const std::string& name) { return (fs::path(out_dir) / name).string(); };

    for (double lambda : {1.1, 2.0, 8.0, 1000.0}) {
        char name[64];
        std::snprintf(name, sizeof(name), "strip_curves_lambda%g.csv", lambda);
        strip_curves(lambda, 400, at(name), 1e-4);
    }
    strip_reversing(1.1, 500, at("strip_reversing_lambda1.1.csv"));
    ball_curves(2.0, 400, at("ball_curves_lambda2.csv"));
    ball_curves(0.5, 400, at("ball_curves_lambda0.5.csv"));
    gaussmod_curves(400, at("gaussmod_curves.csv"));

    const std::vector<AcceptanceResult> results = run_acceptance();
    bool all_pass = true;
    for (const AcceptanceResult& r : results) all_pass = all_pass && r.pass;
    const json summary = {{"all_pass", all_pass},
                          {"criteria", acceptance_to_json(results)}};
    std::ofstream(at("summary.json")) << summary.dump(2) << "\n";
    return summary;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isoperimetric profiles for planar piecewise and modified Gauss "
                 "densities: curves, crossovers, oracle certification, calibration"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    double lambda = 2.0;
    int samples = 400;
    std::string out_path = "curves.csv";
    double h_min = 1e-4;
    std::string action;

    auto* strip_cmd = app.add_subcommand("strip", "strip density candidates");
    auto* strip_curves_cmd = strip_cmd->add_subcommand("curves", "perimeter vs area CSV");
    strip_curves_cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    strip_curves_cmd->add_option("--samples", samples)->check(CLI::Range(2, 1000000));
    strip_curves_cmd->add_option("--out", out_path);
    strip_curves_cmd->add_option("--h-min", h_min)->check(CLI::PositiveNumber);
    auto* strip_cross_cmd = strip_cmd->add_subcommand("crossover", "volume v0 where family ii loses");
    strip_cross_cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    auto* strip_scan_cmd = strip_cmd->add_subcommand("scan-iv", "family iv dominance scan");
    strip_scan_cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    strip_scan_cmd->add_option("--samples", samples)->check(CLI::Range(2, 1000000));
    std::string scan_out;
    strip_scan_cmd->add_option("--out", scan_out, "optional per-h gap CSV");
    auto* strip_arcgap_cmd = strip_cmd->add_subcommand("arcgap", "minimum of 2 arc(x) - arc(2x)");

    auto* ball_cmd = app.add_subcommand("ball", "ball density candidates");
    auto* ball_curves_cmd = ball_cmd->add_subcommand("curves", "perimeter vs area CSV");
    ball_curves_cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    ball_curves_cmd->add_option("--samples", samples)->check(CLI::Range(2, 1000000));
    ball_curves_cmd->add_option("--out", out_path);
    auto* ball_cross_cmd = ball_cmd->add_subcommand("crossover", "family crossover volumes");
    ball_cross_cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    auto* ball_shapes_cmd = ball_cmd->add_subcommand("shapes", "lens shape-class transitions");
    ball_shapes_cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
    ball_shapes_cmd->add_option("--samples", samples)->check(CLI::Range(2, 1000000));

    auto* gauss_cmd = app.add_subcommand("gaussmod", "exp(-x^2-y^4) density");
    auto* gauss_curves_cmd = gauss_cmd->add_subcommand("curves", "line profiles CSV");
    gauss_curves_cmd->add_option("--samples", samples)->check(CLI::Range(2, 1000000));
    gauss_curves_cmd->add_option("--out", out_path);
    auto* gauss_cross_cmd = gauss_cmd->add_subcommand("crossover", "horizontal/vertical threshold y*");

    auto* line_cmd = app.add_subcommand("line", "weighted-line density");
    auto* line_ratio_cmd = line_cmd->add_subcommand("ratio", "isoperimetric ratio vs 4 pi lambda");
    line_ratio_cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);

    auto* halfspace_cmd = app.add_subcommand("halfspace", "half-space density (same profile as ball family a)");
    auto* halfspace_curves_cmd = halfspace_cmd->add_subcommand("curves", "perimeter vs area CSV");
    halfspace_curves_cmd->add_option("--samples", samples)->check(CLI::Range(2, 1000000));
    halfspace_curves_cmd->add_option("--out", out_path);

    std::string candidate = "strip:i";
    double param = 1.0;
    double aux = 0.0;
    int segments = 10000;
    double magnitude = 1e-3;
    int trials = 50;
    std::uint64_t seed = 20260825ULL;
    auto* oracle_cmd = app.add_subcommand("oracle", "polygonal certification");
    auto* oracle_verify_cmd = oracle_cmd->add_subcommand("verify", "closed form vs polygon oracle");
    auto* oracle_probe_cmd = oracle_cmd->add_subcommand("probe", "random area-preserving perturbations");
    for (auto* cmd : {oracle_verify_cmd, oracle_probe_cmd}) {
        cmd->add_option("--candidate", candidate,
                        "strip:i|ii|iii|iv, ball:a|big|b|B|C, line, gauss:h|v, disk");
        cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);
        cmd->add_option("--param,--v,--alpha,--beta,--beta-hat,--offset,--radius",
                        param, "family parameter (v, h, angle or offset)");
        cmd->add_option("--aux", aux, "line arc radius / disk center offset");
        cmd->add_option("--segments", segments)->check(CLI::Range(16, 10000000));
    }
    oracle_probe_cmd->add_option("--magnitude", magnitude)->check(CLI::PositiveNumber);
    oracle_probe_cmd->add_option("--trials", trials)->check(CLI::Range(1, 100000));
    oracle_probe_cmd->add_option("--seed", seed);

    std::string cal_case = "cone";
    double step = 0.02;
    auto* calibrate_cmd = app.add_subcommand("calibrate", "calibration condition residuals");
    calibrate_cmd->add_option("--case", cal_case)
        ->check(CLI::IsMember({"cone", "halfplane", "exp-x"}));
    calibrate_cmd->add_option("--step", step)->check(CLI::PositiveNumber);

    std::string kind = "gauss-mod";
    auto* density_cmd = app.add_subcommand("density", "density model queries");
    auto* density_mass_cmd = density_cmd->add_subcommand("mass", "total weighted mass of the plane");
    density_mass_cmd->add_option("--kind", kind,
                                 "strip|ball|line|half-space|gauss-mod|constant");
    density_mass_cmd->add_option("--lambda", lambda)->check(CLI::PositiveNumber);

    std::string out_dir = "figures";
    auto* repro_cmd = app.add_subcommand("reproduce-all", "emit all figure CSVs and the acceptance summary");
    repro_cmd->add_option("--out-dir", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (strip_curves_cmd->parsed()) {
            strip_curves(lambda, samples, out_path, h_min);
            emit({{"out", out_path}, {"samples", samples}, {"lambda", lambda}}, as_json);
        } else if (strip_cross_cmd->parsed()) {
            std::cout << strip::crossover_v0(lambda).to_json().dump(2) << "\n";
        } else if (strip_scan_cmd->parsed()) {
            std::vector<double> grid;
            for (int i = 1; i <= samples; ++i)
                grid.push_back(static_cast<double>(i) / samples);
            const strip::DominanceScan scan = strip::iv_dominance_scan(lambda, grid);
            if (!scan_out.empty()) {
                CsvWriter csv(scan_out, "h,gap");
                for (std::size_t i = 0; i < scan.grid.size(); ++i)
                    csv.row(num(scan.grid[i]), {scan.gaps[i]});
            }
            emit({{"lambda", lambda},
                  {"violations", scan.violations},
                  {"min_gap", scan.min_gap}},
                 true);
        } else if (strip_arcgap_cmd->parsed()) {
            const strip::ArcGapMin m = strip::arc_gap_min();
            emit({{"x_min", m.x_min}, {"value", m.value}, {"pi_over_4", 0.25 * M_PI}},
                 true);
        } else if (ball_curves_cmd->parsed()) {
            ball_curves(lambda, samples, out_path);
            emit({{"out", out_path}, {"samples", samples}, {"lambda", lambda}}, as_json);
        } else if (ball_cross_cmd->parsed()) {
            if (lambda > 1.0) {
                std::cout << ball::crossover_gt1(lambda).to_json().dump(2) << "\n";
            } else {
                const ball::CrossoverLt1 c = ball::crossover_lt1(lambda);
                emit({{"v1", c.v1.to_json()},
                      {"v2", c.v2.to_json()},
                      {"coincide", c.coincide}},
                     true);
            }
        } else if (ball_shapes_cmd->parsed()) {
            std::cout << ball_shapes(lambda, samples).dump(2) << "\n";
        } else if (gauss_curves_cmd->parsed()) {
            gaussmod_curves(samples, out_path);
            emit({{"out", out_path}, {"samples", samples}}, as_json);
        } else if (gauss_cross_cmd->parsed()) {
            const CrossoverReport r = gaussmod::crossover_y();
            emit({{"y_star", r.value},
                  {"bracket", {r.bracket_lo, r.bracket_hi}},
                  {"constant", gaussmod::dominance_constant()}},
                 true);
        } else if (line_ratio_cmd->parsed()) {
            const double ratio = line_density_ratio(lambda);
            emit({{"lambda", lambda},
                  {"ratio", ratio},
                  {"bound", 4.0 * M_PI * lambda},
                  {"margin", 4.0 * M_PI * lambda - ratio}},
                 true);
        } else if (halfspace_curves_cmd->parsed()) {
            CsvWriter csv(out_path, "family,parameter,area,perimeter");
            for (int i = 1; i <= samples; ++i) {
                const double v = 4.0 * M_PI * static_cast<double>(i) / samples;
                csv.row("half-ball", {v, v, ball::profile_a(v)});
            }
            emit({{"out", out_path}, {"samples", samples}}, as_json);
        } else if (oracle_verify_cmd->parsed()) {
            std::cout << oracle_verify({candidate, lambda, param, aux}, segments).dump(2)
                      << "\n";
        } else if (oracle_probe_cmd->parsed()) {
            const CandidateGeometry g =
                sample_candidate({candidate, lambda, param, aux}, segments);
            const ProbeReport r =
                perturbation_probe(g.polygon, g.density, magnitude, trials, seed);
            std::cout << probe_to_json(r).dump(2) << "\n";
        } else if (calibrate_cmd->parsed()) {
            const CalibrationCase c = calibration_case(cal_case);
            const CalibrationResiduals r = calibration_residuals(c, step);
            const OrderStudy div = div_order_study(c, step);
            json out = {{"case", cal_case},
                        {"step", step},
                        {"max_norm_excess", r.max_norm_excess},
                        {"max_div", r.max_div},
                        {"max_normal_mismatch", r.max_normal_mismatch},
                        {"div_order", div.order},
                        {"div_below_floor", div.below_floor}};
            if (cal_case != "halfplane") {
                const OrderStudy mse = mse_order_study(cal_case, step);
                out["mse_order"] = mse.order;
                out["mse_below_floor"] = mse.below_floor;
            }
            std::cout << out.dump(2) << "\n";
        } else if (density_mass_cmd->parsed()) {
            const Density d = Density::from_json({{"kind", kind}, {"lambda", lambda}});
            const auto mass = total_mass(d);
            json out = {{"kind", kind}};
            if (mass)
                out["total_mass"] = *mass;
            else
                out["total_mass"] = nullptr;
            std::cout << out.dump(2) << "\n";
        } else if (repro_cmd->parsed()) {
            const json summary = reproduce_all(out_dir);
            emit({{"out_dir", out_dir}, {"all_pass", summary["all_pass"]}}, as_json);
        }
    } catch (const ConvergenceFailure& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 3;
    } catch (const QuadratureFailure& e) {
        std::cerr << "quadrature failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
