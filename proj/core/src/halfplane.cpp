#include "vrkit/halfplane.hpp"

#include <algorithm>
#include <cmath>

namespace vrkit {

namespace {

cx reflect(cx z) { return {-z.real(), z.imag()}; }

// distance from w to the hyperbola xi * eta = xi0 * eta0 (first-order estimate)
double hyperbola_distance(cx z0, cx w) {
    const double residual = w.real() * w.imag() - z0.real() * z0.imag();
    return std::abs(residual) / std::max(std::abs(w), 1e-300);
}

}  // namespace

cx hp_curve_point(hp_curve kind, cx z0, double t) {
    if (!(z0.imag() > 0.0) || z0.real() < 0.0)
        throw out_of_domain("hp_curve_point: base point needs Re z0 >= 0, Im z0 > 0");
    if (!(t >= 0.0)) throw out_of_domain("hp_curve_point: parameter must be >= 0");
    switch (kind) {
        case hp_curve::C:
            // Im(z0^2 - 2t) = 2 Re z0 Im z0 >= 0, so the principal root stays in the
            // closed first quadrant: it is the continuation from z0 at t = 0
            return std::sqrt(z0 * z0 - 2.0 * t);
        case hp_curve::D:
            return z0 + std::polar(t, std::arg(z0));
        case hp_curve::Cstar:
            return std::sqrt(z0 * z0 + 2.0 * t);
        case hp_curve::Dstar:
            if (!(t < std::abs(z0)))
                throw out_of_domain("hp_curve_point: inward segment requires t < |z0|");
            return z0 - std::polar(t, std::arg(z0));
    }
    throw out_of_range("hp_curve_point: unknown kind");
}

verdict classify_vi(cx z0, cx w, double tol) {
    if (!(z0.imag() > 0.0)) throw out_of_domain("classify_vi: requires Im z0 > 0");
    if (z0.real() < 0.0) return classify_vi(reflect(z0), reflect(w), tol);

    if (std::abs(w - z0) <= tol) return {true, locus::at_z0, ""};

    const double xi0 = z0.real(), eta0 = z0.imag();
    const double xi = w.real(), eta = w.imag();

    if (xi0 == 0.0) {
        // degenerate region: the vertical ray z0 + is, s >= 0
        if (std::abs(xi) <= tol && eta >= eta0 - tol) return {true, locus::on_boundary, "ray"};
        return {false, locus::outside, ""};
    }

    // membership is decided by exact comparisons; tol only snaps annotations and
    // rescues points within tol of the included hyperbola edge
    const bool above = eta > eta0;
    const bool right_of_hyperbola = xi * eta >= xi0 * eta0;
    const bool left_of_ray = xi * eta0 < xi0 * eta;
    const double d_curve = hyperbola_distance(z0, w);

    if (above && right_of_hyperbola && left_of_ray)
        return {true, d_curve <= tol ? locus::on_boundary : locus::interior, d_curve <= tol ? "C" : ""};

    if (d_curve <= tol && left_of_ray && eta >= eta0 - tol * std::max(1.0, eta0))
        return {true, locus::on_boundary, "C"};

    // annotate the excluded outward ray
    const cx dir = std::polar(1.0, std::arg(z0));
    const cx rel = (w - z0) * std::conj(dir);
    if (std::abs(rel.imag()) <= tol && rel.real() >= -tol) return {false, locus::on_excluded, "D"};

    return {false, locus::outside, ""};
}

verdict classify_vistar(cx z0, cx w, double tol) {
    if (!(z0.imag() > 0.0)) throw out_of_domain("classify_vistar: requires Im z0 > 0");
    if (z0.real() < 0.0) return classify_vistar(reflect(z0), reflect(w), tol);

    if (std::abs(w - z0) <= tol) return {true, locus::at_z0, ""};

    const double xi0 = z0.real(), eta0 = z0.imag();
    const double xi = w.real(), eta = w.imag();

    if (xi0 == 0.0) {
        // degenerate region: the vertical segment z0 - it, t in [0, Im z0); 0 excluded
        if (std::abs(xi) <= tol && eta > 0.0 && eta <= eta0) return {true, locus::on_boundary, "segment"};
        if (std::abs(xi) <= tol && std::abs(eta) <= tol) return {false, locus::on_excluded, "axis"};
        return {false, locus::outside, ""};
    }

    const bool below = eta < eta0;
    const bool right_of_ray = xi * eta0 > xi0 * eta;
    const bool left_of_hyperbola = xi * eta <= xi0 * eta0;
    const double d_curve = hyperbola_distance(z0, w);

    if (eta > 0.0 && below && right_of_ray && left_of_hyperbola)
        return {true, d_curve <= tol ? locus::on_boundary : locus::interior, d_curve <= tol ? "Cstar" : ""};

    if (d_curve <= tol && right_of_ray && eta > 0.0 && eta <= eta0 + tol * std::max(1.0, eta0))
        return {true, locus::on_boundary, "Cstar"};

    // annotate the two excluded boundary pieces: the positive real axis ...
    if (std::abs(eta) <= tol && xi >= -tol) return {false, locus::on_excluded, "axis"};
    // ... and the inward segment from z0 towards 0
    const cx dir = std::polar(1.0, std::arg(z0));
    const cx rel = (z0 - w) * std::conj(dir);
    if (std::abs(rel.imag()) <= tol && rel.real() >= -tol && rel.real() <= std::abs(z0) + tol)
        return {false, locus::on_excluded, "Dstar"};

    return {false, locus::outside, ""};
}

region_spec make_hp_region(const std::string& kind, cx z0, double eta_max) {
    if (kind != "VI" && kind != "VIstar") throw out_of_range("make_hp_region: kind must be VI or VIstar");
    if (!(z0.imag() > 0.0)) throw out_of_domain("make_hp_region: requires Im z0 > 0");
    if (z0.real() < 0.0) {
        region_spec spec = make_hp_region(kind, reflect(z0), eta_max);
        spec.z0 = z0;
        for (auto& e : spec.edges)
            for (auto& p : e.points) p = reflect(p);
        for (auto& p : spec.excluded_points) p = reflect(p);
        spec.interval_a = reflect(spec.interval_a);
        spec.interval_b = reflect(spec.interval_b);
        return spec;
    }

    const double xi0 = z0.real(), eta0 = z0.imag();
    if (eta_max <= 0.0) eta_max = 50.0 * eta0;
    if (eta_max <= eta0 * 1.01) throw out_of_range("make_hp_region: truncation height too small");

    region_spec spec;
    spec.kind = kind;
    spec.z0 = z0;

    if (xi0 == 0.0) {
        spec.degenerate = true;
        if (kind == "VI") {
            spec.interval_a = z0;          // included: the base point itself
            spec.interval_b = cx{0.0, eta_max};  // truncation of the unbounded ray
            spec.a_included = true;
            spec.b_included = true;
        } else {
            spec.interval_a = z0;
            spec.interval_b = cx{0.0, 0.0};  // open end: 0 is not attainable
            spec.a_included = true;
            spec.b_included = false;
        }
        return spec;
    }

    const double sag_tol = 1e-6 * (1.0 + eta_max);
    const auto on_hyperbola = [&](double eta) { return cx{xi0 * eta0 / eta, eta}; };

    if (kind == "VI") {
        // counterclockwise: down the hyperbola to z0, out along the ray, close at the top
        auto curve = sample_adaptive(on_hyperbola, eta_max, eta0, 192, sag_tol);
        region_edge edge_c{"C", {}, true};
        for (auto& [s, p] : curve) edge_c.points.push_back(p);
        edge_c.points.back() = z0;

        const double s_max = (eta_max - eta0) / std::sin(std::arg(z0));
        region_edge edge_d{"D", {}, false};
        for (int i = 0; i <= 64; ++i)
            edge_d.points.push_back(z0 + std::polar(s_max * i / 64.0, std::arg(z0)));

        region_edge top{"truncation", {edge_d.points.back(), edge_c.points.front()}, false};
        spec.edges = {edge_c, edge_d, top};
        return spec;
    }

    // inverse region, counterclockwise: down the inward segment, along the axis,
    // up the truncation edge, back along the hyperbola to z0
    const double kappa = eta_max / eta0;
    const double xi_max = kappa * xi0;
    const double eta_min = xi0 * eta0 / xi_max;

    region_edge edge_dstar{"Dstar", {}, false};
    for (int i = 0; i <= 64; ++i)
        edge_dstar.points.push_back(z0 - std::polar(std::abs(z0) * i / 64.0, std::arg(z0)));

    region_edge axis{"axis", {cx{0.0, 0.0}, cx{xi_max, 0.0}}, false};
    region_edge right{"truncation", {cx{xi_max, 0.0}, cx{xi_max, eta_min}}, false};

    auto curve = sample_adaptive(on_hyperbola, eta_min, eta0, 192, sag_tol);
    region_edge edge_cstar{"Cstar", {}, true};
    for (auto& [s, p] : curve) edge_cstar.points.push_back(p);
    edge_cstar.points.front() = cx{xi_max, eta_min};
    edge_cstar.points.back() = z0;

    spec.edges = {edge_dstar, axis, right, edge_cstar};
    return spec;
}

}  // namespace vrkit
