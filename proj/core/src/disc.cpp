#include "vrkit/disc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vrkit/halfplane.hpp"

namespace vrkit {

namespace {

constexpr double point_snap = 1e-13;  // radius for excluded single points
constexpr double boundary_sag = 1e-7;  // chordal accuracy of exported boundary edges

void require_disc_base(cx z0) {
    if (!(std::abs(z0) < 1.0) || z0 == cx{0.0, 0.0})
        throw out_of_domain("disc region: base point must satisfy 0 < |z0| < 1");
}

double cross(cx a, cx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double scale_of(cx w) { return 1.0 + std::abs(w); }

// both slit-curve families evaluate as 2 z0 / den where the two sign choices of
// den multiply to 4 z0^2, i.e. the two candidate values multiply to 1; the value
// inside the disc is the one with the larger |den|
cx slit_curve_eval(cx z0, double t, bool plus) {
    const cx base = plus ? z0 + 1.0 : z0 - 1.0;
    const cx big = std::exp(t) * base * base;
    const cx offset = plus ? -2.0 * z0 : 2.0 * z0;
    const cx root = std::sqrt(plus ? big - 4.0 * z0 : big + 4.0 * z0);
    const cx wing = std::exp(t / 2.0) * base * root;
    const cx den1 = big + offset + (plus ? wing : -wing);
    const cx den2 = big + offset - (plus ? wing : -wing);
    const cx den = std::abs(den1) >= std::abs(den2) ? den1 : den2;
    return 2.0 * z0 / den;
}

struct fitted_circle {
    cx c;
    double r = 0.0;
};

fitted_circle fit_circle(cx p, cx q, cx r) {
    auto col = circle_through(p, q, r);
    if (col.is_line) throw degenerate_input("disc region: boundary arc degenerated to a line");
    return {col.as_circle.center, col.as_circle.radius};
}

// signed distance to the circle: negative inside
double circle_sd(const fitted_circle& k, cx w) { return std::abs(w - k.c) - k.r; }

// |d(square_side)/dw|, used to convert squared-coordinate distances to w-scale
double square_side_speed(cx w) {
    const cx one_minus = 1.0 - w;
    return 4.0 * std::abs(1.0 + w) / std::max(std::norm(one_minus) * std::abs(one_minus), 1e-300);
}

verdict conj_verdict(verdict v) { return v; }

// membership on a degenerate (real-axis or segment) region
verdict classify_interval(cx a, cx b, bool a_inc, bool b_inc, cx z0, cx w, double tol) {
    if (std::abs(w - z0) <= tol) {
        // the base point may or may not belong to the interval
        const cx u = (b - a) / std::abs(b - a);
        const double s = ((z0 - a) * std::conj(u)).real();
        const bool on = std::abs(((z0 - a) * std::conj(u)).imag()) <= tol && s >= -tol &&
                        s <= std::abs(b - a) + tol;
        if (on) return {true, locus::at_z0, ""};
    }
    const double len = std::abs(b - a);
    const cx u = (b - a) / len;
    const cx rel = (w - a) * std::conj(u);
    if (std::abs(rel.imag()) > tol) return {false, locus::outside, ""};
    const double s = rel.real();
    if (s < -tol || s > len + tol) return {false, locus::outside, ""};
    if (std::abs(w - a) <= tol)
        return a_inc ? verdict{true, locus::on_boundary, "interval"}
                     : verdict{false, locus::on_excluded, "interval"};
    if (std::abs(w - b) <= tol)
        return b_inc ? verdict{true, locus::on_boundary, "interval"}
                     : verdict{false, locus::on_excluded, "interval"};
    return {true, locus::on_boundary, "interval"};
}

verdict classify_degenerate(const region_spec& spec, cx w, double tol) {
    return classify_interval(spec.interval_a, spec.interval_b, spec.a_included, spec.b_included,
                             spec.z0, w, tol);
}

region_spec degenerate_spec(const std::string& kind, cx z0, double tau, cx a, cx b, bool a_inc,
                            bool b_inc) {
    region_spec spec;
    spec.kind = kind;
    spec.z0 = z0;
    spec.tau = tau;
    spec.degenerate = true;
    spec.interval_a = a;
    spec.interval_b = b;
    spec.a_included = a_inc;
    spec.b_included = b_inc;
    return spec;
}

// circular arc from `from` to `to` on circle k, sweeping the side that does not
// pass the angle of `avoid`
std::vector<cx> arc_avoiding(const fitted_circle& k, cx from, cx to, cx avoid, int n) {
    const double a0 = std::arg(from - k.c);
    double sweep = std::arg(to - k.c) - a0;
    const double pi2 = 2.0 * std::acos(-1.0);
    while (sweep <= 0.0) sweep += pi2;
    double off = std::arg(avoid - k.c) - a0;
    while (off < 0.0) off += pi2;
    if (off < sweep) sweep -= pi2;  // forbidden angle sits on the ccw side: go clockwise
    std::vector<cx> pts(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        pts[static_cast<size_t>(i)] = k.c + std::polar(k.r, a0 + sweep * i / n);
    pts.front() = from;
    pts.back() = to;
    return pts;
}

}  // namespace

cx disc_curve_point(disc_curve kind, cx z0, double t) {
    require_disc_base(z0);
    const bool starred = kind == disc_curve::CplusStar || kind == disc_curve::CminusStar;
    if (!std::isfinite(t)) throw out_of_domain("disc_curve_point: parameter must be finite");
    if (!starred && t < 0.0)
        throw out_of_domain("disc_curve_point: forward curves need t >= 0");
    if (starred && t > 0.0)
        throw out_of_domain("disc_curve_point: backward curves need t <= 0");
    const bool plus = kind == disc_curve::Cplus || kind == disc_curve::CplusStar;
    return slit_curve_eval(z0, t, plus);
}

cx extremal_map(int family, double t, cx z) {
    if (family != 1 && family != 2) throw out_of_range("extremal_map: family must be 1 or 2");
    if (!(t >= 0.0)) throw out_of_domain("extremal_map: time must be >= 0");
    if (!(std::abs(z) < 1.0)) throw out_of_domain("extremal_map: argument must be in the unit disc");
    if (z == cx{0.0, 0.0}) return z;
    return slit_curve_eval(z, t, family == 1);
}

cx tau_point_p(cx z0, double tau) {
    require_disc_base(z0);
    if (!(tau > 0.0) || tau > 1.0) throw out_of_range("tau_point_p: tau must be in (0, 1]");
    const cx num = (1.0 + z0) * (1.0 + z0);
    return num / (num - 4.0 * tau * z0);
}

cx tau_point_q(cx z0, double tau) {
    require_disc_base(z0);
    if (!(tau > 0.0) || tau > 1.0) throw out_of_range("tau_point_q: tau must be in (0, 1]");
    return 1.0 + 4.0 * tau * z0 / ((1.0 - z0) * (1.0 - z0));
}

cx vt_arc_point(cx z0, double tau, int which, double s) {
    require_disc_base(z0);
    if (!(tau > 0.0) || tau > 1.0) throw out_of_range("vt_arc_point: tau must be in (0, 1]");
    const double join = 2.0 * tau - 1.0;
    const double slack = 1e-12;
    if (which == 1) {
        if (s < join - slack || s > 1.0 + slack)
            throw out_of_range("vt_arc_point: first arc takes s in [2 tau - 1, 1]");
        return 1.0 + 4.0 * tau * z0 / (1.0 - 2.0 * s * z0 + z0 * z0);
    }
    if (which == 2) {
        if (s < -1.0 - slack || s > join + slack)
            throw out_of_range("vt_arc_point: second arc takes s in [-1, 2 tau - 1]");
        const cx num = (z0 + 1.0) * (z0 + 1.0) * (1.0 + z0 * (-4.0 + 4.0 * tau - 2.0 * s + z0));
        const cx den = (z0 - 1.0) * (z0 - 1.0) * (1.0 - 2.0 * s * z0 + z0 * z0);
        return num / den;
    }
    throw out_of_range("vt_arc_point: which must be 1 or 2");
}

cx real_coeff_curve(char which, cx z0, double x) {
    require_disc_base(z0);
    if (!(x >= 0.0) || x > 1.0) throw out_of_range("real_coeff_curve: x must be in [0, 1]");
    switch (which) {
        case 'A':
            return z0 * (z0 - x) / (z0 * x - 1.0);
        case 'B':
            return z0 * (z0 + x) / (z0 * x + 1.0);
        case 'C':
            return z0 * z0 * (z0 + 2.0 * x - 1.0) / (1.0 + 2.0 * x * z0 - z0);
    }
    throw out_of_range("real_coeff_curve: which must be 'A', 'B' or 'C'");
}

cx zero_class_image_arc(cx z0, int which, double s) {
    require_disc_base(z0);
    if (!(s >= 0.0) || s > 1.0) throw out_of_range("zero_class_image_arc: s must be in [0, 1]");
    const cx zz = z0 * z0;
    if (which == 0) {
        const double y = s - 1.0;  // y in [-1, 0]
        return (1.0 + z0) * (1.0 - 2.0 * (1.0 + y) * z0 + zz) /
               ((1.0 - z0) * (1.0 - 2.0 * y * z0 + zz));
    }
    if (which == 1) {
        const double x = s;
        return -(z0 - 1.0) * (1.0 + z0 * (2.0 - 2.0 * x + z0)) /
               ((1.0 + z0) * (1.0 - 2.0 * x * z0 + zz));
    }
    throw out_of_range("zero_class_image_arc: which must be 0 or 1");
}

verdict classify_vu(cx z0, cx w, double tol) {
    require_disc_base(z0);
    if (z0.imag() < 0.0) return conj_verdict(classify_vu(std::conj(z0), std::conj(w), tol));
    if (z0.imag() == 0.0) {
        // region collapses to the real interval between 0 (excluded) and z0
        return z0.real() > 0.0
                   ? classify_interval(cx{0.0, 0.0}, z0, false, true, z0, w, tol)
                   : classify_interval(z0, cx{0.0, 0.0}, true, false, z0, w, tol);
    }
    if (std::abs(w - z0) <= tol) return {true, locus::at_z0, ""};
    if (std::abs(w) <= point_snap) return {false, locus::on_excluded, "origin"};
    if (std::abs(w) >= 1.0) return {false, locus::outside, ""};

    const cx g = mobius(mobius_kind::square_side, w);
    const cx p_end = tau_point_p(z0, 1.0);
    const cx p_mid = tau_point_p(z0, 0.5);
    const fitted_circle k = fit_circle(cx{1.0, 0.0}, p_mid, p_end);

    const cx chord = p_end - 1.0;
    const double side = cross(chord, g - 1.0);
    const double bulge = cross(chord, p_mid - 1.0) >= 0.0 ? 1.0 : -1.0;

    const bool in_disc = circle_sd(k, g) <= 0.0;
    const bool on_arc_side = side * bulge >= 0.0;

    const double speed = std::max(square_side_speed(w), 1e-300);
    const double d_arc = std::abs(circle_sd(k, g)) / speed;
    const double d_chord = std::abs(side) / std::abs(chord) / speed;

    if (in_disc && on_arc_side) {
        if (std::min(d_arc, d_chord) <= tol)
            return {true, locus::on_boundary, d_arc <= d_chord ? "Cplus" : "Cminus"};
        return {true, locus::interior, ""};
    }
    // rescue within tol of either included edge
    if (d_arc <= tol && side * bulge >= -tol * std::abs(chord) * speed)
        return {true, locus::on_boundary, "Cplus"};
    if (d_chord <= tol && circle_sd(k, g) <= tol * speed)
        return {true, locus::on_boundary, "Cminus"};
    return {false, locus::outside, ""};
}

verdict classify_vt(cx z0, double tau, cx w, double tol) {
    require_disc_base(z0);
    if (!(tau > 0.0) || tau > 1.0) throw out_of_range("classify_vt: tau must be in (0, 1]");
    if (z0.imag() < 0.0) return conj_verdict(classify_vt(std::conj(z0), tau, std::conj(w), tol));
    if (tau == 1.0) {
        // the region is the single point z0
        if (std::abs(w - z0) <= tol) return {true, locus::at_z0, ""};
        return {false, locus::outside, ""};
    }
    if (z0.imag() == 0.0) {
        const double p = tau_point_p(z0, tau).real();
        const double q = tau_point_q(z0, tau).real();
        const double lo = mobius(mobius_kind::sqrt_side, cx{std::min(p, q), 0.0}).real();
        const double hi = mobius(mobius_kind::sqrt_side, cx{std::max(p, q), 0.0}).real();
        return classify_interval(cx{lo, 0.0}, cx{hi, 0.0}, true, true, z0, w, tol);
    }
    if (std::abs(w) >= 1.0) return {false, locus::outside, ""};

    const double join = 2.0 * tau - 1.0;
    const fitted_circle k1 = fit_circle(vt_arc_point(z0, tau, 1, join), vt_arc_point(z0, tau, 1, tau),
                                        vt_arc_point(z0, tau, 1, 1.0));
    const fitted_circle k2 = fit_circle(vt_arc_point(z0, tau, 2, -1.0),
                                        vt_arc_point(z0, tau, 2, tau - 1.0),
                                        vt_arc_point(z0, tau, 2, join));

    // the region is convex with a two-arc boundary, hence exactly the lens cut
    // out by the two discs (in the squared coordinate)
    const cx g = mobius(mobius_kind::square_side, w);
    const double sd1 = circle_sd(k1, g);
    const double sd2 = circle_sd(k2, g);
    const double speed = std::max(square_side_speed(w), 1e-300);
    const double d1 = std::abs(sd1) / speed;
    const double d2 = std::abs(sd2) / speed;

    if (sd1 <= 0.0 && sd2 <= 0.0) {
        if (std::min(d1, d2) <= tol)
            return {true, locus::on_boundary, d1 <= d2 ? "arc1" : "arc2"};
        return {true, locus::interior, ""};
    }
    if ((sd1 <= 0.0 || d1 <= tol) && (sd2 <= 0.0 || d2 <= tol))
        return {true, locus::on_boundary, d1 >= d2 ? "arc1" : "arc2"};
    return {false, locus::outside, ""};
}

verdict classify_vr(cx z0, cx w, double tol) {
    require_disc_base(z0);
    if (z0.imag() == 0.0)
        throw degenerate_input("classify_vr: region is not defined for a real base point");
    if (z0.imag() < 0.0) return conj_verdict(classify_vr(std::conj(z0), std::conj(w), tol));
    if (std::abs(w - z0) <= tol) return {true, locus::at_z0, ""};

    const fitted_circle k1 = fit_circle(cx{1.0, 0.0}, z0, -z0);
    const fitted_circle k2 = fit_circle(cx{-1.0, 0.0}, -z0, z0);
    const double sd1 = circle_sd(k1, w);
    const double sd2 = circle_sd(k2, w);
    const double band = tol * scale_of(w);

    if (sd1 <= 0.0 && sd2 <= 0.0) {
        if (std::max(sd1, sd2) >= -band)
            return {true, locus::on_boundary, sd1 >= sd2 ? "arc_pos" : "arc_neg"};
        return {true, locus::interior, ""};
    }
    if (sd1 <= band && sd2 <= band)
        return {true, locus::on_boundary, sd1 >= sd2 ? "arc_pos" : "arc_neg"};
    return {false, locus::outside, ""};
}

namespace {

struct arcgon {
    // convex region bounded by circular arcs between consecutive vertices; the
    // region is the chord polygon plus the circular segment beyond each chord
    std::vector<cx> vertex;
    std::vector<fitted_circle> edge_circle;
    std::vector<std::string> edge_name;
    double orient = 1.0;

    bool contains(cx w, double slack) const {
        bool in_poly = true;
        for (size_t i = 0; i < vertex.size(); ++i) {
            const cx a = vertex[i], b = vertex[(i + 1) % vertex.size()];
            if (cross(b - a, w - a) * orient < -slack * std::abs(b - a)) in_poly = false;
        }
        if (in_poly) return true;
        for (size_t i = 0; i < vertex.size(); ++i) {
            const cx a = vertex[i], b = vertex[(i + 1) % vertex.size()];
            if (cross(b - a, w - a) * orient < 0.0 && circle_sd(edge_circle[i], w) <= slack)
                return true;
        }
        return false;
    }

    std::pair<double, std::string> nearest_edge(cx w) const {
        double best = std::numeric_limits<double>::infinity();
        std::string name;
        for (size_t i = 0; i < vertex.size(); ++i) {
            const double d = std::abs(circle_sd(edge_circle[i], w));
            if (d < best) {
                best = d;
                name = edge_name[i];
            }
        }
        return {best, name};
    }
};

arcgon real_coeff_arcgon(cx z0) {
    const cx zz = z0 * z0;
    arcgon a;
    a.vertex = {z0, -zz, zz};
    a.edge_name = {"A", "C", "B"};
    a.edge_circle = {
        fit_circle(real_coeff_curve('A', z0, 0.0), real_coeff_curve('A', z0, 0.5),
                   real_coeff_curve('A', z0, 1.0)),
        fit_circle(real_coeff_curve('C', z0, 0.0), real_coeff_curve('C', z0, 0.5),
                   real_coeff_curve('C', z0, 1.0)),
        fit_circle(real_coeff_curve('B', z0, 0.0), real_coeff_curve('B', z0, 0.5),
                   real_coeff_curve('B', z0, 1.0)),
    };
    a.orient = cross(a.vertex[1] - a.vertex[0], a.vertex[2] - a.vertex[0]) >= 0.0 ? 1.0 : -1.0;
    return a;
}

}  // namespace

verdict classify_vrgeq(cx z0, cx w, double tol) {
    require_disc_base(z0);
    if (z0.imag() < 0.0) return conj_verdict(classify_vrgeq(std::conj(z0), std::conj(w), tol));
    if (z0.imag() == 0.0) {
        const double zz = z0.real() * z0.real();
        return z0.real() > 0.0
                   ? classify_interval(cx{-zz, 0.0}, z0, true, true, z0, w, tol)
                   : classify_interval(z0, cx{zz, 0.0}, true, true, z0, w, tol);
    }
    if (std::abs(w - z0) <= tol) return {true, locus::at_z0, ""};

    const arcgon a = real_coeff_arcgon(z0);
    const double band = tol * scale_of(w);
    if (a.contains(w, 0.0)) {
        auto [d, name] = a.nearest_edge(w);
        if (d <= band) return {true, locus::on_boundary, name};
        return {true, locus::interior, ""};
    }
    if (a.contains(w, band)) {
        auto [d, name] = a.nearest_edge(w);
        return {true, locus::on_boundary, name};
    }
    return {false, locus::outside, ""};
}

verdict classify_vrgt(cx z0, cx w, double tol) {
    require_disc_base(z0);
    if (z0.imag() < 0.0) return conj_verdict(classify_vrgt(std::conj(z0), std::conj(w), tol));
    if (z0.imag() == 0.0) {
        // only the endpoint reached solely with derivative 0 drops out
        const double zz = z0.real() * z0.real();
        return z0.real() > 0.0
                   ? classify_interval(cx{-zz, 0.0}, z0, false, true, z0, w, tol)
                   : classify_interval(z0, cx{zz, 0.0}, true, false, z0, w, tol);
    }
    verdict v = classify_vrgeq(z0, w, tol);
    if (!v.member) return v;
    if (v.where == locus::at_z0) return v;

    // remove points lying exactly on the zero-derivative edge (curve 'C'),
    // which the positive-derivative class does not attain
    const arcgon a = real_coeff_arcgon(z0);
    const fitted_circle kc = a.edge_circle[1];
    const cx ca = a.vertex[1], cb = a.vertex[2];
    const double exact_band = algebraic_tol * scale_of(w);
    if (std::abs(circle_sd(kc, w)) <= exact_band &&
        cross(cb - ca, w - ca) * a.orient <= exact_band * std::abs(cb - ca))
        return {false, locus::on_excluded, "C"};
    return v;
}

verdict classify_vr0(cx z0, cx w, double tol) {
    require_disc_base(z0);
    if (z0.imag() < 0.0) return conj_verdict(classify_vr0(std::conj(z0), std::conj(w), tol));
    if (z0.imag() == 0.0) {
        const double zz = z0.real() * z0.real();
        return classify_interval(cx{-zz, 0.0}, cx{zz, 0.0}, true, true, z0, w, tol);
    }

    const fitted_circle k1 = fit_circle(real_coeff_curve('C', z0, 0.0),
                                        real_coeff_curve('C', z0, 0.5),
                                        real_coeff_curve('C', z0, 1.0));
    const fitted_circle k2{-k1.c, k1.r};  // the mirrored arc -C
    const double sd1 = circle_sd(k1, w);
    const double sd2 = circle_sd(k2, w);
    const double band = tol * scale_of(w);

    if (sd1 <= 0.0 && sd2 <= 0.0) {
        if (std::max(sd1, sd2) >= -band)
            return {true, locus::on_boundary, sd1 >= sd2 ? "C" : "Cneg"};
        return {true, locus::interior, ""};
    }
    if (sd1 <= band && sd2 <= band)
        return {true, locus::on_boundary, sd1 >= sd2 ? "C" : "Cneg"};
    return {false, locus::outside, ""};
}

verdict classify_vustar(cx z0, cx w, double tol) {
    return classify_region(make_disc_region("VUstar", z0), w, tol);
}

region_spec make_disc_region(const std::string& kind, cx z0, double tau) {
    require_disc_base(z0);
    if (z0.imag() < 0.0) {
        region_spec spec = make_disc_region(kind, std::conj(z0), tau);
        spec.z0 = z0;
        for (auto& e : spec.edges)
            for (auto& p : e.points) p = std::conj(p);
        for (auto& p : spec.excluded_points) p = std::conj(p);
        spec.interval_a = std::conj(spec.interval_a);
        spec.interval_b = std::conj(spec.interval_b);
        return spec;
    }

    const double x0 = z0.real();
    const cx zz = z0 * z0;

    if (z0.imag() == 0.0) {
        if (kind == "VU")
            return x0 > 0.0 ? degenerate_spec(kind, z0, tau, cx{0.0, 0.0}, z0, false, true)
                            : degenerate_spec(kind, z0, tau, z0, cx{0.0, 0.0}, true, false);
        if (kind == "VUstar")
            return x0 > 0.0 ? degenerate_spec(kind, z0, tau, z0, cx{1.0, 0.0}, true, false)
                            : degenerate_spec(kind, z0, tau, cx{-1.0, 0.0}, z0, false, true);
        if (kind == "VT") {
            if (!(tau > 0.0) || tau > 1.0)
                throw out_of_range("make_disc_region: tau must be in (0, 1]");
            if (tau == 1.0) {
                region_spec spec = degenerate_spec(kind, z0, tau, z0, z0, true, true);
                spec.point_region = true;
                return spec;
            }
            const double p = tau_point_p(z0, tau).real();
            const double q = tau_point_q(z0, tau).real();
            const double lo = mobius(mobius_kind::sqrt_side, cx{std::min(p, q), 0.0}).real();
            const double hi = mobius(mobius_kind::sqrt_side, cx{std::max(p, q), 0.0}).real();
            return degenerate_spec(kind, z0, tau, cx{lo, 0.0}, cx{hi, 0.0}, true, true);
        }
        if (kind == "VR")
            throw degenerate_input("make_disc_region: VR is not defined for a real base point");
        const double z2 = x0 * x0;
        if (kind == "VRgeq")
            return x0 > 0.0 ? degenerate_spec(kind, z0, tau, cx{-z2, 0.0}, z0, true, true)
                            : degenerate_spec(kind, z0, tau, z0, cx{z2, 0.0}, true, true);
        if (kind == "VRgt")
            return x0 > 0.0 ? degenerate_spec(kind, z0, tau, cx{-z2, 0.0}, z0, false, true)
                            : degenerate_spec(kind, z0, tau, z0, cx{z2, 0.0}, true, false);
        if (kind == "VR0")
            return degenerate_spec(kind, z0, tau, cx{-z2, 0.0}, cx{z2, 0.0}, true, true);
        throw out_of_range("make_disc_region: unknown kind " + kind);
    }

    region_spec spec;
    spec.kind = kind;
    spec.z0 = z0;
    spec.tau = tau;
    const double sag = boundary_sag;

    if (kind == "VU") {
        // both curves run from z0 into the origin; t is compactified as s = 1 - e^{-t}
        const double t_max = 30.0;
        const double s_max = 1.0 - std::exp(-t_max);
        const auto to_t = [&](double s) { return -std::log1p(-s); };
        region_edge plus_edge{"Cplus", {}, true};
        for (auto& [s, p] :
             sample_adaptive([&](double s) { return slit_curve_eval(z0, to_t(s), true); }, 0.0,
                             s_max, 256, sag))
            plus_edge.points.push_back(p);
        plus_edge.points.front() = z0;
        plus_edge.points.push_back(cx{0.0, 0.0});
        region_edge minus_edge{"Cminus", {}, true};
        minus_edge.points.push_back(cx{0.0, 0.0});
        auto minus_samples = sample_adaptive(
            [&](double s) { return slit_curve_eval(z0, to_t(s), false); }, 0.0, s_max, 256, sag);
        for (auto it = minus_samples.rbegin(); it != minus_samples.rend(); ++it)
            minus_edge.points.push_back(it->second);
        minus_edge.points.back() = z0;
        spec.edges = {plus_edge, minus_edge};
        spec.excluded_points = {cx{0.0, 0.0}};
        return spec;
    }

    if (kind == "VUstar") {
        // curves run from z0 towards -1 resp. +1; s = e^{t} compactifies t <= 0
        const double t_min = -30.0;
        const double s_min = std::exp(t_min);
        region_edge plus_edge{"CplusStar", {}, true};
        for (auto& [s, p] : sample_adaptive(
                 [&](double s) { return slit_curve_eval(z0, std::log(s), true); }, 1.0, s_min, 256,
                 sag))
            plus_edge.points.push_back(p);
        plus_edge.points.front() = z0;
        plus_edge.points.push_back(cx{-1.0, 0.0});

        region_edge rim{"unit_circle", {}, false};
        const double pi = std::acos(-1.0);
        // 4000 chords keep the polyline within boundary_sag of the circle
        for (int i = 0; i <= 4000; ++i) rim.points.push_back(std::polar(1.0, pi - pi * i / 4000.0));

        region_edge minus_edge{"CminusStar", {}, true};
        minus_edge.points.push_back(cx{1.0, 0.0});
        auto minus_samples = sample_adaptive(
            [&](double s) { return slit_curve_eval(z0, std::log(s), false); }, 1.0, s_min, 256, sag);
        for (auto it = minus_samples.rbegin(); it != minus_samples.rend(); ++it)
            minus_edge.points.push_back(it->second);
        minus_edge.points.back() = z0;

        spec.edges = {plus_edge, rim, minus_edge};
        spec.excluded_points = {cx{-1.0, 0.0}, cx{1.0, 0.0}};
        return spec;
    }

    if (kind == "VT") {
        if (!(tau > 0.0) || tau > 1.0) throw out_of_range("make_disc_region: tau must be in (0, 1]");
        if (tau == 1.0) {
            spec.point_region = true;
            return spec;
        }
        const double join = 2.0 * tau - 1.0;
        region_edge arc1{"arc1", {}, true};
        for (auto& [s, p] : sample_adaptive(
                 [&](double s) {
                     return mobius(mobius_kind::sqrt_side, vt_arc_point(z0, tau, 1, s));
                 },
                 join, 1.0, 256, sag))
            arc1.points.push_back(p);
        region_edge arc2{"arc2", {}, true};
        for (auto& [s, p] : sample_adaptive(
                 [&](double s) {
                     return mobius(mobius_kind::sqrt_side, vt_arc_point(z0, tau, 2, s));
                 },
                 -1.0, join, 256, sag))
            arc2.points.push_back(p);
        spec.edges = {arc1, arc2};
        return spec;
    }

    if (kind == "VR") {
        const fitted_circle k1 = fit_circle(cx{1.0, 0.0}, z0, -z0);
        const fitted_circle k2 = fit_circle(cx{-1.0, 0.0}, -z0, z0);
        region_edge arc_pos{"arc_pos", arc_avoiding(k1, z0, -z0, cx{1.0, 0.0}, 256), true};
        region_edge arc_neg{"arc_neg", arc_avoiding(k2, -z0, z0, cx{-1.0, 0.0}, 256), true};
        spec.edges = {arc_pos, arc_neg};
        return spec;
    }

    if (kind == "VRgeq" || kind == "VRgt") {
        region_edge ea{"A", {}, true};
        for (auto& [s, p] :
             sample_adaptive([&](double x) { return real_coeff_curve('A', z0, x); }, 1.0, 0.0, 128,
                             sag))
            ea.points.push_back(p);
        ea.points.front() = z0;
        ea.points.back() = -zz;
        region_edge ec{"C", {}, kind == "VRgeq"};
        for (auto& [s, p] :
             sample_adaptive([&](double x) { return real_coeff_curve('C', z0, x); }, 0.0, 1.0, 128,
                             sag))
            ec.points.push_back(p);
        ec.points.front() = -zz;
        ec.points.back() = zz;
        region_edge eb{"B", {}, true};
        for (auto& [s, p] :
             sample_adaptive([&](double x) { return real_coeff_curve('B', z0, x); }, 0.0, 1.0, 128,
                             sag))
            eb.points.push_back(p);
        eb.points.front() = zz;
        eb.points.back() = z0;
        spec.edges = {ea, ec, eb};
        return spec;
    }

    if (kind == "VR0") {
        region_edge ec{"C", {}, true};
        for (auto& [s, p] :
             sample_adaptive([&](double x) { return real_coeff_curve('C', z0, x); }, 0.0, 1.0, 128,
                             sag))
            ec.points.push_back(p);
        ec.points.front() = -zz;
        ec.points.back() = zz;
        region_edge en{"Cneg", {}, true};
        for (auto& [s, p] :
             sample_adaptive([&](double x) { return -real_coeff_curve('C', z0, x); }, 0.0, 1.0, 128,
                             sag))
            en.points.push_back(p);
        en.points.front() = zz;
        en.points.back() = -zz;
        spec.edges = {ec, en};
        return spec;
    }

    throw out_of_range("make_disc_region: unknown kind " + kind);
}

verdict classify_region(const region_spec& spec, cx w, double tol) {
    if (spec.point_region) {
        if (std::abs(w - spec.z0) <= tol) return {true, locus::at_z0, ""};
        return {false, locus::outside, ""};
    }
    if (spec.degenerate) return classify_degenerate(spec, w, tol);

    for (const cx& p : spec.excluded_points)
        if (std::abs(w - p) <= point_snap) return {false, locus::on_excluded, "point"};

    if (spec.kind == "VI") return classify_vi(spec.z0, w, tol);
    if (spec.kind == "VIstar") return classify_vistar(spec.z0, w, tol);
    if (spec.kind == "VU") return classify_vu(spec.z0, w, tol);
    if (spec.kind == "VT") return classify_vt(spec.z0, spec.tau, w, tol);
    if (spec.kind == "VR") return classify_vr(spec.z0, w, tol);
    if (spec.kind == "VRgeq") return classify_vrgeq(spec.z0, w, tol);
    if (spec.kind == "VRgt") return classify_vrgt(spec.z0, w, tol);
    if (spec.kind == "VR0") return classify_vr0(spec.z0, w, tol);

    if (spec.kind == "VUstar") {
        if (std::abs(w - spec.z0) <= tol) return {true, locus::at_z0, ""};
        if (std::abs(w) > 1.0 + tol) return {false, locus::outside, ""};
        const double sgn = spec.z0.imag() < 0.0 ? -1.0 : 1.0;
        if (std::abs(std::abs(w) - 1.0) <= tol && sgn * w.imag() >= -tol)
            return {false, locus::on_excluded, "unit_circle"};

        // attribute anything inside the chordal accuracy of a stored edge to it
        const double band = std::max(tol, 4.0 * boundary_sag);
        double best = std::numeric_limits<double>::infinity();
        const region_edge* nearest = nullptr;
        for (const auto& e : spec.edges) {
            const double d = distance_to_polyline(polyline{e.points, false}, w);
            if (d < best) {
                best = d;
                nearest = &e;
            }
        }
        if (nearest && best <= band) {
            if (nearest->included) return {true, locus::on_boundary, nearest->name};
            return {false, locus::on_excluded, nearest->name};
        }
        if (winding_contains(boundary_polyline(spec), w, tol) == containment::inside)
            return {true, locus::interior, ""};
        return {false, locus::outside, ""};
    }

    throw out_of_range("classify_region: unknown kind " + spec.kind);
}

}  // namespace vrkit
