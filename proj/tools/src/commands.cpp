#include "vrkit_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "vrkit_cli/figures.hpp"
#include "vrkit_cli/json_io.hpp"
#include "vrkit_cli/svg.hpp"
#include "vrkit_cli/verify.hpp"
#include "vrkit_cli/z0_parse.hpp"
#include "vrkit/disc.hpp"
#include "vrkit/errors.hpp"
#include "vrkit/halfplane.hpp"
#include "vrkit/loewner.hpp"
#include "vrkit/region.hpp"

namespace vrkit::cli {
namespace {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_samples(const std::vector<std::array<double, 3>>& rows) {
    std::string out = "t,re,im\n";
    for (const auto& r : rows)
        out += format_number(r[0]) + "," + format_number(r[1]) + "," + format_number(r[2]) + "\n";
    return out;
}

bool is_halfplane_kind(const std::string& kind) { return kind == "VI" || kind == "VIstar"; }

// ---------------------------------------------------------------- region ---

struct region_args {
    std::string kind;
    std::string z0_text;
    double tau = 0.0;
    bool tau_set = false;
    std::string format = "json";
    std::string out;
};

int do_region(const region_args& a) {
    const cx z0 = parse_complex(a.z0_text);
    region_spec spec;
    if (is_halfplane_kind(a.kind)) {
        spec = make_hp_region(a.kind, z0);
    } else {
        if (a.kind == "VT" && !a.tau_set)
            throw std::invalid_argument("region VT requires --tau");
        spec = make_disc_region(a.kind, z0, a.tau);
    }
    if (a.format == "json") {
        write_text(a.out, dump_json(region_to_json(spec)));
        return 0;
    }
    if (a.format == "svg") {
        svg_doc doc = is_halfplane_kind(a.kind) ? svg_doc::halfplane_frame() : svg_doc::disc_frame();
        if (!is_halfplane_kind(a.kind)) doc.add_unit_circle();
        doc.add_axes();
        add_region(doc, spec, "#2c6fbb", true);
        write_text(a.out, doc.str());
        return 0;
    }
    throw std::invalid_argument("region supports --format json|svg");
}

// ----------------------------------------------------------------- curve ---

struct curve_args {
    std::string kind;
    std::string z0_text;
    int n = 256;
    double tmax = 10.0;
    std::string format = "json";
    std::string out;
};

struct curve_family {
    bool halfplane;
    hp_curve hp;
    disc_curve disc;
    bool backward;       // starred disc curves run over t <= 0
    bool open_param_cap; // Dstar is only defined for t < |z0|
};

curve_family curve_lookup(const std::string& kind) {
    if (kind == "C") return {true, hp_curve::C, {}, false, false};
    if (kind == "D") return {true, hp_curve::D, {}, false, false};
    if (kind == "Cstar") return {true, hp_curve::Cstar, {}, false, false};
    if (kind == "Dstar") return {true, hp_curve::Dstar, {}, false, true};
    if (kind == "Cplus") return {false, {}, disc_curve::Cplus, false, false};
    if (kind == "Cminus") return {false, {}, disc_curve::Cminus, false, false};
    if (kind == "CplusStar") return {false, {}, disc_curve::CplusStar, true, false};
    if (kind == "CminusStar") return {false, {}, disc_curve::CminusStar, true, false};
    throw out_of_range("unknown curve kind: " + kind);
}

int do_curve(const curve_args& a) {
    if (a.n < 2) throw std::invalid_argument("curve needs --n >= 2");
    if (a.tmax <= 0.0) throw std::invalid_argument("curve needs --tmax > 0");
    const cx z0 = parse_complex(a.z0_text);
    const curve_family fam = curve_lookup(a.kind);

    double lo = 0.0, hi = a.tmax;
    if (fam.open_param_cap) hi = std::min(hi, std::abs(z0) * (1.0 - 1e-9));
    if (fam.backward) { lo = -a.tmax; hi = 0.0; }
    const auto eval = [&](double t) {
        return fam.halfplane ? hp_curve_point(fam.hp, z0, t) : disc_curve_point(fam.disc, z0, t);
    };

    if (a.format == "svg") {
        svg_doc doc = fam.halfplane ? svg_doc::halfplane_frame() : svg_doc::disc_frame();
        if (!fam.halfplane) doc.add_unit_circle();
        doc.add_axes();
        std::vector<cx> pts;
        for (const auto& [t, w] : sample_adaptive(eval, lo, hi, a.n, 1e-3)) pts.push_back(w);
        doc.add_path(pts, "curve " + a.kind, "#2c6fbb", 2.0, false, "none", false);
        doc.add_marker(z0, 4.0, "basepoint", "#222222", true);
        write_text(a.out, doc.str());
        return 0;
    }

    std::vector<std::array<double, 3>> rows;
    rows.reserve(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i) {
        const double t = lo + (hi - lo) * i / (a.n - 1);
        const cx w = eval(t);
        rows.push_back({t, w.real(), w.imag()});
    }
    if (a.format == "csv") {
        write_text(a.out, csv_samples(rows));
        return 0;
    }
    if (a.format == "json") {
        json j;
        j["schema"] = "vrkit/1";
        j["type"] = "curve";
        j["kind"] = a.kind;
        j["z0"] = complex_to_json(z0);
        json samples = json::array();
        for (const auto& r : rows) samples.push_back({r[0], r[1], r[2]});
        j["samples"] = samples;
        write_text(a.out, dump_json(j));
        return 0;
    }
    throw std::invalid_argument("curve supports --format json|csv|svg");
}

// -------------------------------------------------------------- simulate ---

struct simulate_args {
    std::string z0_text;
    std::string driving_file;
    double exponent_x = 0.0;
    bool exponent_set = false;
    double T = 0.0;
    bool T_set = false;
    double eta = 0.0;
    bool eta_set = false;
    double tol = 1e-10;
    bool thunder = false;
    std::string format = "json";
    std::string out;
};

int do_simulate(const simulate_args& a) {
    const cx z0 = parse_complex(a.z0_text);

    driving_spec driving;
    if (!a.driving_file.empty()) {
        driving = driving_from_json(read_json_file(a.driving_file));
    } else if (a.exponent_set) {
        driving = exponent_driving(a.exponent_x, z0);
    } else {
        // default: zero driving. Its trajectory has Im w(t) = sqrt(eta0^2 + 2t),
        // so a height target is reachable within a closed-form horizon.
        double horizon = a.T_set ? a.T : 1.0;
        if (!a.T_set && a.eta_set)
            horizon = 0.625 * (a.eta * a.eta - z0.imag() * z0.imag()) + 1.0;
        driving = driving_spec::constant_slit(0.0, horizon);
    }

    trajectory traj;
    if (a.eta_set) {
        traj = integrate_to_height(z0, driving, a.eta, a.tol);
    } else {
        double T = a.T_set ? a.T : driving.max_time();
        if (!std::isfinite(T))
            throw std::invalid_argument("this driving has no end time; pass --T or --eta");
        traj = integrate(z0, driving, T, a.tol);
    }

    if (a.format == "csv") {
        std::vector<std::array<double, 3>> rows;
        rows.reserve(traj.samples.size());
        for (const auto& s : traj.samples) rows.push_back({s.t, s.w.real(), s.w.imag()});
        write_text(a.out, csv_samples(rows));
        return 0;
    }
    if (a.format == "json") {
        json j = trajectory_to_json(traj);
        if (a.thunder) {
            const thunder_report rep = thunder_check(traj);
            j["thunder"] = {{"max_lower_violation", rep.max_lower_violation},
                            {"min_upper_margin", rep.min_upper_margin},
                            {"upper_strict", rep.upper_strict}};
        }
        write_text(a.out, dump_json(j));
        return 0;
    }
    throw std::invalid_argument("simulate supports --format json|csv");
}

// ---------------------------------------------------------------- verify ---

struct verify_args {
    std::string suite;
    std::string z0_text;
    uint64_t n = 1000;
    uint64_t seed = 42;
    double tol = 0.0;
    bool tol_set = false;
    std::string out;
};

int do_verify(const verify_args& a) {
    verify_options opt;
    if (!a.z0_text.empty()) {
        opt.z0_set = true;
        opt.z0 = parse_complex(a.z0_text);
    }
    opt.n = a.n;
    opt.seed = a.seed;
    opt.tol_set = a.tol_set;
    opt.tol = a.tol;

    const verify_report report = run_suite(a.suite, opt);

    char line[256];
    std::snprintf(line, sizeof(line), "suite %s: %llu samples, %zu failures, max violation %.3g, %.2fs\n",
                  report.suite.c_str(), static_cast<unsigned long long>(report.samples_run),
                  report.failures.size(), report.max_violation, report.wall_time_s);
    std::cout << line;
    const size_t shown = std::min<size_t>(report.failures.size(), 10);
    for (size_t i = 0; i < shown; ++i) {
        const auto& f = report.failures[i];
        std::snprintf(line, sizeof(line), "  FAIL %s: %s at %.17g%+.17gi (margin %.3g)\n",
                      f.input.c_str(), f.verdict.c_str(), f.value.real(), f.value.imag(), f.margin);
        std::cout << line;
    }
    if (report.failures.size() > shown)
        std::cout << "  ... " << (report.failures.size() - shown) << " more\n";

    if (!a.out.empty()) write_text(a.out, dump_json(report_to_json(report)));
    return report.failures.empty() ? 0 : 1;
}

// ---------------------------------------------------------------- figure ---

struct figure_args {
    std::string name;
    std::string out;
};

int do_figure(const figure_args& a) {
    write_text(a.out, render_figure(a.name));
    return 0;
}

// -------------------------------------------------------------- dispatch ---

int dispatch(CLI::App& app, const region_args& reg, const curve_args& cur, const simulate_args& sim,
             const verify_args& ver, const figure_args& fig) {
    if (app.get_subcommand("region")->parsed()) return do_region(reg);
    if (app.get_subcommand("curve")->parsed()) return do_curve(cur);
    if (app.get_subcommand("simulate")->parsed()) return do_simulate(sim);
    if (app.get_subcommand("verify")->parsed()) return do_verify(ver);
    if (app.get_subcommand("figure")->parsed()) return do_figure(fig);
    return 2;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"value regions of bounded typically real functions and their driving-function counterparts"};
    app.require_subcommand(1);

    region_args reg;
    auto* region_cmd = app.add_subcommand("region", "emit a value-region boundary description");
    region_cmd->add_option("--kind", reg.kind, "VI, VIstar, VU, VUstar, VT, VR, VRgeq, VRgt or VR0")
        ->required();
    region_cmd->add_option("--z0", reg.z0_text, "base point, e.g. 0.3+0.5i")->required();
    auto* reg_tau = region_cmd->add_option("--tau", reg.tau, "derivative value for VT, in (0,1]");
    region_cmd->add_option("--format", reg.format, "json or svg (default json)");
    region_cmd->add_option("--out", reg.out, "output path (default stdout)");

    curve_args cur;
    auto* curve_cmd = app.add_subcommand("curve", "sample a boundary curve");
    curve_cmd
        ->add_option("--kind", cur.kind, "C, D, Cstar, Dstar, Cplus, Cminus, CplusStar or CminusStar")
        ->required();
    curve_cmd->add_option("--z0", cur.z0_text, "base point")->required();
    curve_cmd->add_option("--n", cur.n, "number of samples (default 256)");
    curve_cmd->add_option("--tmax", cur.tmax, "parameter range bound (default 10)");
    curve_cmd->add_option("--format", cur.format, "json, csv or svg (default json)");
    curve_cmd->add_option("--out", cur.out, "output path (default stdout)");

    simulate_args sim;
    auto* sim_cmd = app.add_subcommand("simulate", "integrate a driven chordal evolution");
    sim_cmd->add_option("--z0", sim.z0_text, "initial point, Im > 0")->required();
    auto* sim_driving = sim_cmd->add_option("--driving", sim.driving_file, "driving description (JSON file)");
    auto* sim_exp = sim_cmd->add_option("--exponent", sim.exponent_x, "power-law driving exponent x");
    sim_exp->excludes(sim_driving);
    auto* sim_T = sim_cmd->add_option("--T", sim.T, "time horizon");
    auto* sim_eta = sim_cmd->add_option("--eta", sim.eta, "stop once Im w reaches this height");
    sim_eta->excludes(sim_T);
    sim_cmd->add_option("--tol", sim.tol, "relative step tolerance (default 1e-10)");
    sim_cmd->add_flag("--thunder", sim.thunder, "append growth-envelope check to the output");
    sim_cmd->add_option("--format", sim.format, "json or csv (default json)");
    sim_cmd->add_option("--out", sim.out, "output path (default stdout)");

    verify_args ver;
    auto* verify_cmd = app.add_subcommand("verify", "run a randomized verification suite");
    verify_cmd
        ->add_option("--suite", ver.suite,
                     "hp-containment, hp-inverse, disc-szapiel, disc-herglotz, curve-identities, "
                     "nesting or f0")
        ->required();
    verify_cmd->add_option("--z0", ver.z0_text, "base point (suite default when omitted)");
    verify_cmd->add_option("--n", ver.n, "sample count (default 1000)");
    verify_cmd->add_option("--seed", ver.seed, "random seed (default 42)");
    auto* ver_tol = verify_cmd->add_option("--tol", ver.tol, "tolerance (suite default when omitted)");
    verify_cmd->add_option("--out", ver.out, "write the full report JSON here");

    figure_args fig;
    auto* figure_cmd = app.add_subcommand("figure", "render a built-in figure as SVG");
    figure_cmd->add_option("name", fig.name, "fig1, fig2, fig4, fig5 or fig6")->required();
    figure_cmd->add_option("--out", fig.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    reg.tau_set = reg_tau->count() > 0;
    sim.exponent_set = sim_exp->count() > 0;
    sim.T_set = sim_T->count() > 0;
    sim.eta_set = sim_eta->count() > 0;
    ver.tol_set = ver_tol->count() > 0;

    try {
        return dispatch(app, reg, cur, sim, ver, fig);
    } catch (const degenerate_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const out_of_domain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        // remaining library errors are numerical: branch loss, unreachable
        // tolerance, rejection budget, malformed boundary data
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace vrkit::cli
