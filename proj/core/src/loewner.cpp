#include "vrkit/loewner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vrkit {

namespace {

constexpr double denom_guard = 1e-14;
constexpr double rel_tol_min = 1e-13;
constexpr double rel_tol_max = 1e-6;

struct piece_view {
    double t0 = 0.0;
    double t1 = 0.0;
};

// right-hand side of the evolution for one driving piece
struct rhs_fn {
    const driving_spec* spec;
    size_t piece = 0;

    cx operator()(double t, cx w) const {
        switch (spec->kind) {
            case driving_spec::kind_t::slit: {
                const auto& p = spec->slit_pieces[piece];
                const double len = p.t_end - p.t_start;
                const double frac = len > 0.0 && std::isfinite(len) ? (t - p.t_start) / len : 0.0;
                const double u = p.value_start + (p.value_end - p.value_start) * frac;
                const cx den = u - w * w;
                if (std::abs(den) < denom_guard)
                    throw tolerance_unreachable("integrate: driving denominator vanished", t);
                return w / den;
            }
            case driving_spec::kind_t::measure_path: {
                const auto& p = spec->measure_pieces[piece];
                cx acc{0.0, 0.0};
                for (const auto& a : p.measure.atoms) {
                    const cx den = a.position - w * w;
                    if (std::abs(den) < denom_guard)
                        throw tolerance_unreachable("integrate: driving denominator vanished", t);
                    acc += a.weight * (w / den);
                }
                return acc;
            }
            case driving_spec::kind_t::exponent: {
                const double x = spec->exponent_x;
                const double xi0 = spec->anchor.real();
                const double eta0 = spec->anchor.imag();
                const double eta = w.imag();
                const double u = (1.0 + x) / (1.0 - x) *
                                 (xi0 * xi0 * std::pow(eta / eta0, 2.0 * x) + eta * eta);
                const cx den = u - w * w;
                if (std::abs(den) < denom_guard)
                    throw tolerance_unreachable("integrate: driving denominator vanished", t);
                return w / den;
            }
        }
        throw out_of_range("integrate: unknown driving kind");
    }
};

size_t piece_count(const driving_spec& d) {
    switch (d.kind) {
        case driving_spec::kind_t::slit: return d.slit_pieces.size();
        case driving_spec::kind_t::measure_path: return d.measure_pieces.size();
        case driving_spec::kind_t::exponent: return 1;
    }
    return 0;
}

piece_view piece_span(const driving_spec& d, size_t i) {
    switch (d.kind) {
        case driving_spec::kind_t::slit: return {d.slit_pieces[i].t_start, d.slit_pieces[i].t_end};
        case driving_spec::kind_t::measure_path:
            return {d.measure_pieces[i].t_start, d.measure_pieces[i].t_end};
        case driving_spec::kind_t::exponent:
            return {0.0, std::numeric_limits<double>::infinity()};
    }
    return {};
}

// Dormand-Prince 5(4) embedded pair
struct dp45_step {
    cx w5;       // fifth-order advance
    double err;  // |w5 - w4|
};

dp45_step rk_step(const rhs_fn& f, double t, cx w, double h) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const cx k1 = f(t, w);
    const cx k2 = f(t + c2 * h, w + h * (a21 * k1));
    const cx k3 = f(t + c3 * h, w + h * (a31 * k1 + a32 * k2));
    const cx k4 = f(t + c4 * h, w + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const cx k5 = f(t + c5 * h, w + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const cx k6 = f(t + h, w + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const cx w5 = w + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const cx k7 = f(t + h, w5);
    const cx err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    return {w5, std::abs(err)};
}

struct stop_cond {
    double T = std::numeric_limits<double>::infinity();           // stop at time T
    double eta = std::numeric_limits<double>::infinity();         // or at height Im w = eta
    bool by_height() const { return std::isfinite(eta); }
};

trajectory integrate_core(cx z0, const driving_spec& driving, stop_cond stop, double rel_tol) {
    driving.validate();
    if (!(z0.imag() > 0.0)) throw out_of_domain("integrate: starting point must satisfy Im z0 > 0");
    if (!(rel_tol >= rel_tol_min && rel_tol <= rel_tol_max))
        throw out_of_range("integrate: rel_tol must lie in [1e-13, 1e-6]");
    if (stop.by_height()) {
        if (!(stop.eta > z0.imag()))
            throw out_of_range("integrate_to_height: target height must exceed Im z0");
    } else {
        if (!(stop.T > 0.0)) throw out_of_range("integrate: horizon T must be positive");
        if (stop.T > driving.max_time())
            throw out_of_domain("integrate: driving spec does not cover [0, T]");
    }

    trajectory traj;
    traj.z0 = z0;
    traj.driving = driving;
    traj.samples.push_back({0.0, z0});

    double t = 0.0;
    cx w = z0;
    const size_t pieces = piece_count(driving);

    for (size_t pi = 0; pi < pieces; ++pi) {
        const piece_view span = piece_span(driving, pi);
        if (!stop.by_height() && span.t0 >= stop.T) break;
        const double seg_end = stop.by_height() ? span.t1 : std::min(span.t1, stop.T);
        if (seg_end <= t) continue;
        rhs_fn f{&driving, pi};

        // initial step: conservative fraction of the remaining segment and of the height cap
        cx dw = f(t, w);
        double h = std::min({std::isfinite(seg_end) ? (seg_end - t) : 1.0,
                             0.01 * (1.0 + std::abs(w)) / (std::abs(dw) + 1e-300),
                             0.05 * w.imag() / (std::abs(dw) + 1e-300)});
        if (!(h > 0.0)) h = 1e-8;

        while (t < seg_end) {
            const double rem = seg_end - t;
            if (std::isfinite(rem) && rem <= 1e-14 * std::max(1.0, t)) {
                // sub-ulp tail after rounding: snap the last node onto the segment end
                t = seg_end;
                traj.samples.back().t = seg_end;
                break;
            }
            const double h_try = std::min(h, rem);
            if (h_try < 1e-14 * std::max(1.0, t))
                throw tolerance_unreachable("integrate: step size underflow", t);

            const dp45_step st = rk_step(f, t, w, h_try);
            const double budget = rel_tol * h_try * (1.0 + std::max(std::abs(w), std::abs(st.w5)));
            const bool jump_ok = std::abs(st.w5 - w) <= 0.1 * w.imag();
            if (st.err <= budget && jump_ok) {
                t = h_try == rem ? seg_end : t + h_try;
                w = st.w5;
                traj.samples.push_back({t, w});
                if (stop.by_height() && w.imag() >= stop.eta) break;
                const double grow = st.err > 0.0 ? 0.9 * std::pow(budget / st.err, 0.2) : 5.0;
                h = h_try * std::clamp(grow, 0.2, 5.0);
            } else if (!jump_ok) {
                h = h_try * 0.5;
            } else {
                h = h_try * std::clamp(0.9 * std::pow(budget / st.err, 0.2), 0.2, 0.9);
            }
        }
        if (stop.by_height() && w.imag() >= stop.eta) break;
    }

    if (stop.by_height()) {
        if (w.imag() < stop.eta)
            throw out_of_domain("integrate_to_height: driving spec ends below the target height");
        // bisect the final accepted step so the last sample lands on the target height
        if (traj.samples.size() >= 2 && traj.samples.back().w.imag() > stop.eta) {
            const auto prev = traj.samples[traj.samples.size() - 2];
            const auto last = traj.samples.back();
            size_t pi = 0;
            for (size_t i = 0; i < pieces; ++i) {
                const piece_view span = piece_span(driving, i);
                if (prev.t >= span.t0 && prev.t < span.t1) { pi = i; break; }
            }
            rhs_fn f{&driving, pi};
            double lo = 0.0, hi = last.t - prev.t;
            cx w_hit = last.w;
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = 0.5 * (lo + hi);
                const cx wm = rk_step(f, prev.t, prev.w, mid).w5;
                if (wm.imag() >= stop.eta) {
                    hi = mid;
                    w_hit = wm;
                } else {
                    lo = mid;
                }
                if (hi - lo <= 1e-16 * std::max(1.0, prev.t + hi)) break;
            }
            traj.samples.back() = {prev.t + hi, w_hit};
        }
    } else if (traj.samples.back().t != stop.T) {
        throw out_of_domain("integrate: driving spec ended before T");
    }
    return traj;
}

}  // namespace

void discrete_measure::validate(double lo, double hi) const {
    if (atoms.empty()) throw out_of_domain("discrete_measure: no atoms");
    double total = 0.0;
    for (const auto& a : atoms) {
        if (!(a.weight > 0.0)) throw out_of_domain("discrete_measure: weights must be positive");
        if (!(a.position >= lo && a.position <= hi))
            throw out_of_domain("discrete_measure: atom outside declared domain");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw out_of_domain("discrete_measure: weights must sum to 1");
}

driving_spec driving_spec::constant_slit(double value, double t_end) {
    driving_spec d;
    d.kind = kind_t::slit;
    d.slit_pieces.push_back({0.0, t_end, value, value});
    return d;
}

void driving_spec::validate() const {
    const auto check_contiguous = [](double start, double prev_end, bool first) {
        if (first) {
            if (start != 0.0) throw out_of_domain("driving_spec: first piece must start at t = 0");
        } else if (std::abs(start - prev_end) > 1e-12) {
            throw out_of_domain("driving_spec: pieces must be contiguous");
        }
    };
    switch (kind) {
        case kind_t::slit: {
            if (slit_pieces.empty()) throw out_of_domain("driving_spec: no pieces");
            double prev = 0.0;
            bool first = true;
            for (const auto& p : slit_pieces) {
                check_contiguous(p.t_start, prev, first);
                first = false;
                if (!(p.t_end > p.t_start)) throw out_of_domain("driving_spec: empty piece");
                if (p.value_start < 0.0 || p.value_end < 0.0)
                    throw out_of_domain("driving_spec: slit values must be >= 0");
                prev = p.t_end;
            }
            return;
        }
        case kind_t::measure_path: {
            if (measure_pieces.empty()) throw out_of_domain("driving_spec: no pieces");
            double prev = 0.0;
            bool first = true;
            for (const auto& p : measure_pieces) {
                check_contiguous(p.t_start, prev, first);
                first = false;
                if (!(p.t_end > p.t_start)) throw out_of_domain("driving_spec: empty piece");
                p.measure.validate(0.0, std::numeric_limits<double>::infinity());
                prev = p.t_end;
            }
            return;
        }
        case kind_t::exponent: {
            if (!(exponent_x >= -1.0 && exponent_x < 1.0))
                throw out_of_range("driving_spec: exponent must lie in [-1, 1)");
            if (!(anchor.real() > 0.0 && anchor.imag() > 0.0))
                throw out_of_domain("driving_spec: exponent anchor needs Re > 0 and Im > 0");
            return;
        }
    }
    throw out_of_range("driving_spec: unknown kind");
}

double driving_spec::max_time() const {
    switch (kind) {
        case kind_t::slit: return slit_pieces.empty() ? 0.0 : slit_pieces.back().t_end;
        case kind_t::measure_path:
            return measure_pieces.empty() ? 0.0 : measure_pieces.back().t_end;
        case kind_t::exponent: return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

driving_spec exponent_driving(double x, cx z0) {
    if (!(x >= -1.0 && x < 1.0)) throw out_of_range("exponent_driving: x must lie in [-1, 1)");
    if (!(z0.real() > 0.0 && z0.imag() > 0.0))
        throw out_of_domain("exponent_driving: anchor needs Re z0 > 0 and Im z0 > 0");
    if (x == -1.0) return driving_spec::constant_slit(0.0, std::numeric_limits<double>::infinity());
    driving_spec d;
    d.kind = driving_spec::kind_t::exponent;
    d.exponent_x = x;
    d.anchor = z0;
    return d;
}

cx trajectory::at(double t) const {
    if (samples.empty()) throw out_of_range("trajectory::at: empty trajectory");
    if (t < samples.front().t || t > samples.back().t)
        throw out_of_range("trajectory::at: time outside the integrated span");
    auto it = std::lower_bound(samples.begin(), samples.end(), t,
                               [](const sample_t& s, double v) { return s.t < v; });
    if (it != samples.end() && it->t == t) return it->w;
    const auto& b = *it;
    const auto& a = *(it - 1);

    // derivative endpoints from the piece that contains this step
    const size_t n = piece_count(driving);
    size_t pi = 0;
    const double tm = 0.5 * (a.t + b.t);
    for (size_t i = 0; i < n; ++i) {
        const piece_view span = piece_span(driving, i);
        if (tm >= span.t0 && tm <= span.t1) { pi = i; break; }
    }
    rhs_fn f{&driving, pi};
    const double h = b.t - a.t;
    const cx da = f(a.t, a.w) * h;
    const cx db = f(b.t, b.w) * h;
    const double s = (t - a.t) / h;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * a.w + (s3 - 2 * s2 + s) * da + (-2 * s3 + 3 * s2) * b.w +
           (s3 - s2) * db;
}

trajectory integrate(cx z0, const driving_spec& driving, double T, double rel_tol) {
    stop_cond stop;
    stop.T = T;
    return integrate_core(z0, driving, stop, rel_tol);
}

trajectory integrate_to_height(cx z0, const driving_spec& driving, double eta_target,
                               double rel_tol) {
    stop_cond stop;
    stop.eta = eta_target;
    return integrate_core(z0, driving, stop, rel_tol);
}

thunder_report thunder_check(const trajectory& traj) {
    const double xi0 = traj.z0.real(), eta0 = traj.z0.imag();
    if (!(xi0 > 0.0)) throw out_of_domain("thunder_check: requires Re z0 > 0");
    thunder_report rep;
    rep.max_lower_violation = -std::numeric_limits<double>::infinity();
    rep.min_upper_margin = std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& s : traj.samples) {
        if (!(s.t > 0.0)) continue;
        any = true;
        const double ratio = s.w.real() / xi0;
        rep.max_lower_violation = std::max(rep.max_lower_violation, eta0 / s.w.imag() - ratio);
        rep.min_upper_margin = std::min(rep.min_upper_margin, s.w.imag() / eta0 - ratio);
    }
    if (!any) {
        rep.max_lower_violation = 0.0;
        rep.min_upper_margin = 0.0;
        rep.upper_strict = true;
        return rep;
    }
    rep.upper_strict = rep.min_upper_margin > 0.0;
    return rep;
}

}  // namespace vrkit
