#include "vrkit_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <vector>

#include "vrkit/disc.hpp"
#include "vrkit/errors.hpp"
#include "vrkit/halfplane.hpp"
#include "vrkit/loewner.hpp"
#include "vrkit/parallel.hpp"
#include "vrkit/representations.hpp"
#include "vrkit/rng.hpp"

namespace vrkit::cli {

namespace {

const char* locus_name(locus l) {
    switch (l) {
        case locus::interior: return "interior";
        case locus::on_boundary: return "on_boundary";
        case locus::at_z0: return "at_z0";
        case locus::on_excluded: return "on_excluded";
        case locus::outside: return "outside";
    }
    return "?";
}

// per-index scratch, merged in index order so reports are deterministic
struct collector {
    std::vector<std::vector<verify_failure>> slots;
    std::vector<double> violation;

    explicit collector(size_t n) : slots(n), violation(n, 0.0) {}

    void fail(uint64_t i, std::string input, cx value, std::string verdict, double margin) {
        slots[i].push_back({std::move(input), value, std::move(verdict), margin});
        violation[i] = std::max(violation[i], margin);
    }

    void merge_into(verify_report& report) const {
        for (const auto& s : slots)
            report.failures.insert(report.failures.end(), s.begin(), s.end());
        for (double v : violation) report.max_violation = std::max(report.max_violation, v);
    }
};

uint64_t derive_seed(uint64_t seed, uint64_t index) { return stream_for(seed, index).next(); }

verify_report suite_hp_containment(const verify_options& opt) {
    const cx z0 = opt.z0_set ? opt.z0 : cx{1.0, 1.0};
    const double tol = opt.tol_set ? opt.tol : 1e-7;
    verify_report report;
    collector col(static_cast<size_t>(opt.n));
    parallel_for(static_cast<uint64_t>(opt.n), [&](uint64_t i) {
        const auto driving = sample_driving(10, 50.0, derive_seed(opt.seed, i));
        const auto traj = integrate(z0, driving, driving.max_time());
        const cx w = traj.samples.back().w;
        const auto v = classify_vi(z0, w, tol);
        if (!v.member)
            col.fail(i, "driving seed index " + std::to_string(i), w,
                     std::string("endpoint not in forward region (") + locus_name(v.where) + ")",
                     tol);
        const auto corridor = thunder_check(traj);
        if (corridor.max_lower_violation > 1e-9 || !corridor.upper_strict)
            col.fail(i, "driving seed index " + std::to_string(i), w, "corridor bound violated",
                     corridor.max_lower_violation);
    });
    report.samples_run = opt.n;
    col.merge_into(report);
    return report;
}

verify_report suite_hp_inverse(const verify_options& opt) {
    const cx z0 = opt.z0_set ? opt.z0 : cx{1.0, 1.0};
    const double tol = opt.tol_set ? opt.tol : 1e-7;
    verify_report report;
    collector col(static_cast<size_t>(opt.n));
    parallel_for(static_cast<uint64_t>(opt.n), [&](uint64_t i) {
        const auto driving = sample_driving(10, 50.0, derive_seed(opt.seed, i));
        const auto traj = integrate(z0, driving, driving.max_time());
        // earlier points must lie in the backward region of every later point
        const size_t m = traj.samples.size();
        std::vector<size_t> picks;
        for (int k = 0; k < 6; ++k) picks.push_back(k * (m - 1) / 5);
        for (size_t a : picks)
            for (size_t b : picks) {
                if (a >= b) continue;
                const cx late = traj.samples[b].w, early = traj.samples[a].w;
                const auto v = classify_vistar(late, early, tol);
                if (!v.member)
                    col.fail(i, "driving seed index " + std::to_string(i), early,
                             std::string("earlier point not in backward region (") +
                                 locus_name(v.where) + ")",
                             tol);
            }
    });
    report.samples_run = opt.n;
    col.merge_into(report);
    return report;
}

verify_report suite_disc_szapiel(const verify_options& opt) {
    const cx z0 = opt.z0_set ? opt.z0 : std::polar(0.9, std::acos(-1.0) / 4.0);
    const double tol = opt.tol_set ? opt.tol : 1e-7;
    verify_report report;
    collector col(static_cast<size_t>(opt.n));
    parallel_for(static_cast<uint64_t>(opt.n), [&](uint64_t i) {
        const auto spec = sample_szapiel(0.05, 1.0, 1 + static_cast<int>(i % 3),
                                         derive_seed(opt.seed, i));
        const cx f = szapiel_eval(spec, z0);
        const auto in_fixed = classify_vt(z0, spec.tau, f, tol);
        if (!in_fixed.member)
            col.fail(i, "szapiel seed index " + std::to_string(i), f,
                     std::string("value left the fixed-derivative region (") +
                         locus_name(in_fixed.where) + ")",
                     tol);
        const auto in_union = classify_vu(z0, f, tol);
        if (!in_union.member)
            col.fail(i, "szapiel seed index " + std::to_string(i), f,
                     std::string("value left the union region (") + locus_name(in_union.where) +
                         ")",
                     tol);
        if (szapiel_eval(spec, cx{0.0, 0.0}) != cx{0.0, 0.0})
            col.fail(i, "szapiel seed index " + std::to_string(i), f, "f(0) != 0", 1.0);
        const cx d0 = richardson_derivative([&](cx z) { return szapiel_eval(spec, z); }, cx{});
        if (std::abs(d0 - spec.tau) > 1e-6)
            col.fail(i, "szapiel seed index " + std::to_string(i), d0, "f'(0) != tau",
                     std::abs(d0 - spec.tau));
    });
    report.samples_run = opt.n;
    col.merge_into(report);
    return report;
}

verify_report suite_disc_herglotz(const verify_options& opt) {
    const cx z0 = opt.z0_set ? opt.z0 : cx{1.0 / 3.0, 0.5};
    const double tol = opt.tol_set ? opt.tol : 1e-7;
    verify_report report;
    collector col(static_cast<size_t>(opt.n));
    parallel_for(static_cast<uint64_t>(opt.n), [&](uint64_t i) {
        const uint64_t s = derive_seed(opt.seed, i);
        const int atoms = 1 + static_cast<int>(i % 4);

        const auto free_spec = sample_herglotz(herglotz_constraint::none, atoms, s);
        const cx f_free = herglotz_eval(free_spec, z0).second;
        if (!classify_vr(z0, f_free, tol).member)
            col.fail(i, "herglotz(none) seed index " + std::to_string(i), f_free,
                     "value left the real-coefficient region", tol);

        const auto nn_spec = sample_herglotz(herglotz_constraint::nonneg, atoms, s + 1);
        const cx f_nn = herglotz_eval(nn_spec, z0).second;
        if (!classify_vrgeq(z0, f_nn, tol).member)
            col.fail(i, "herglotz(nonneg) seed index " + std::to_string(i), f_nn,
                     "value left the nonnegative-derivative region", tol);

        const auto zero_spec = sample_herglotz(herglotz_constraint::zero, atoms, s + 2);
        const cx f_zero = herglotz_eval(zero_spec, z0).second;
        if (!classify_vr0(z0, f_zero, tol).member)
            col.fail(i, "herglotz(zero) seed index " + std::to_string(i), f_zero,
                     "value left the zero-derivative region", tol);
    });
    report.samples_run = opt.n;
    col.merge_into(report);
    return report;
}

verify_report suite_curve_identities(const verify_options& opt) {
    const cx z0 = opt.z0_set ? opt.z0 : std::polar(0.9, std::acos(-1.0) / 4.0);
    const double tol = opt.tol_set ? opt.tol : 1e-9;
    verify_report report;
    const long n = std::max<long>(opt.n, 2);
    collector col(static_cast<size_t>(n));
    const double lo = std::log(1e-3), hi = std::log(30.0);
    parallel_for(static_cast<uint64_t>(n), [&](uint64_t i) {
        const double t = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                           static_cast<double>(n - 1));
        const double tau = std::exp(-t);
        const cx gp = mobius(mobius_kind::square_side, disc_curve_point(disc_curve::Cplus, z0, t));
        const cx gq = mobius(mobius_kind::square_side, disc_curve_point(disc_curve::Cminus, z0, t));
        const cx p = tau_point_p(z0, tau), q = tau_point_q(z0, tau);
        const double errp = std::abs(gp - p) / (1.0 + std::abs(p));
        const double errq = std::abs(gq - q) / (1.0 + std::abs(q));
        col.violation[i] = std::max(errp, errq);
        if (errp > tol)
            col.fail(i, "t = " + std::to_string(t), gp, "squared slit curve left the tau sweep",
                     errp);
        if (errq > tol)
            col.fail(i, "t = " + std::to_string(t), gq, "squared slit curve left the tau sweep",
                     errq);
    });
    report.samples_run = n;
    col.merge_into(report);

    // arc corners meet the sweep landmarks; the tau = 1 corners coincide
    for (int k = 0; k <= 100; ++k) {
        const double tau = 0.01 + 0.98 * k / 100.0;
        const cx p = tau_point_p(z0, tau), q = tau_point_q(z0, tau);
        const double scale = 1.0 + std::max(std::abs(p), std::abs(q));
        const double err =
            std::max({std::abs(vt_arc_point(z0, tau, 1, 2.0 * tau - 1.0) - p),
                      std::abs(vt_arc_point(z0, tau, 2, 2.0 * tau - 1.0) - p),
                      std::abs(vt_arc_point(z0, tau, 1, 1.0) - q),
                      std::abs(vt_arc_point(z0, tau, 2, -1.0) - q)}) /
            scale;
        report.max_violation = std::max(report.max_violation, err);
        if (err > 1e-12)
            report.failures.push_back({"tau = " + std::to_string(tau), p,
                                       "arc corners miss the sweep landmarks", err});
        report.samples_run += 1;
    }
    const double collapse = std::abs(tau_point_p(z0, 1.0) - tau_point_q(z0, 1.0));
    report.samples_run += 1;
    if (collapse > 1e-12)
        report.failures.push_back(
            {"tau = 1", tau_point_p(z0, 1.0), "full-derivative corners fail to collapse",
             collapse});
    return report;
}

verify_report suite_nesting(const verify_options& opt) {
    const cx z0 = opt.z0_set ? opt.z0 : cx{1.0 / 3.0, 0.5};
    const double tol = opt.tol_set ? opt.tol : 1e-9;
    verify_report report;
    collector col(static_cast<size_t>(opt.n));
    parallel_for(static_cast<uint64_t>(opt.n), [&](uint64_t i) {
        auto gen = stream_for(opt.seed, i);
        cx w;
        do {
            w = cx{gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0)};
        } while (std::abs(w) >= 1.0);
        const std::string tag = "sample index " + std::to_string(i);

        for (double tau : {0.1, 0.5, 0.9})
            if (classify_vt(z0, tau, w, tol).member) {
                if (!classify_vu(z0, w, tol).member)
                    col.fail(i, tag, w, "fixed-derivative member escapes the union region", 1.0);
                if (!classify_vrgeq(z0, w, tol).member)
                    col.fail(i, tag, w,
                             "fixed-derivative member escapes the nonnegative-derivative region",
                             1.0);
            }
        if (classify_vu(z0, w, tol).member && !classify_vrgeq(z0, w, tol).member)
            col.fail(i, tag, w, "union member escapes the nonnegative-derivative region", 1.0);
        if (classify_vr0(z0, w, tol).member && !classify_vrgeq(z0, w, tol).member)
            col.fail(i, tag, w, "zero-derivative member escapes the nonnegative region", 1.0);
        if (classify_vrgt(z0, w, tol).member && !classify_vrgeq(z0, w, tol).member)
            col.fail(i, tag, w, "positive-derivative member escapes the nonnegative region", 1.0);
        if (classify_vrgeq(z0, w, tol).member && !classify_vr(z0, w, tol).member)
            col.fail(i, tag, w, "nonnegative-derivative member escapes the full region", 1.0);
    });
    report.samples_run = opt.n;
    col.merge_into(report);
    return report;
}

verify_report suite_f0(const verify_options&) {
    verify_report report;
    const auto r = f0_critical_check();
    report.samples_run = 1;
    report.max_violation = std::max(r.deriv_at_z_star, r.deriv0_error);
    if (!r.pass)
        report.failures.push_back({"critical point certificate", r.z_star,
                                   "interior critical point check failed",
                                   report.max_violation});
    return report;
}

}  // namespace

verify_report run_suite(const std::string& suite, const verify_options& opt) {
    if (opt.n < 1) throw out_of_range("verify: sample count must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    verify_report report;
    if (suite == "hp-containment")
        report = suite_hp_containment(opt);
    else if (suite == "hp-inverse")
        report = suite_hp_inverse(opt);
    else if (suite == "disc-szapiel")
        report = suite_disc_szapiel(opt);
    else if (suite == "disc-herglotz")
        report = suite_disc_herglotz(opt);
    else if (suite == "curve-identities")
        report = suite_curve_identities(opt);
    else if (suite == "nesting")
        report = suite_nesting(opt);
    else if (suite == "f0")
        report = suite_f0(opt);
    else
        throw out_of_range("unknown verify suite '" + suite + "'");
    report.suite = suite;
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json report_to_json(const verify_report& report) {
    json j;
    j["schema"] = "vrkit/1";
    j["type"] = "verify_report";
    j["suite"] = report.suite;
    j["samples_run"] = report.samples_run;
    json fails = json::array();
    for (const auto& f : report.failures)
        fails.push_back({{"input", f.input},
                         {"value", complex_to_json(f.value)},
                         {"verdict", f.verdict},
                         {"margin", f.margin}});
    j["failures"] = fails;
    j["max_violation"] = report.max_violation;
    j["wall_time_s"] = report.wall_time_s;
    return j;
}

}  // namespace vrkit::cli
