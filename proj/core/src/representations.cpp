#include "vrkit/representations.hpp"

#include <cmath>

#include "vrkit/rng.hpp"

namespace vrkit {

namespace {

constexpr double weight_tol = 1e-12;

void check_weights(const std::vector<double>& w) {
    double total = 0.0;
    for (double wi : w) {
        if (!(wi > 0.0)) throw out_of_domain("measure weights must be positive");
        total += wi;
    }
    if (std::abs(total - 1.0) > weight_tol)
        throw out_of_domain("measure weights must sum to 1");
}

}  // namespace

void szapiel_spec::validate() const {
    if (!(tau > 0.0) || tau > 1.0) throw out_of_range("spec: tau must be in (0, 1]");
    if (atoms.empty()) throw out_of_domain("spec: needs at least one atom");
    const double join = 2.0 * tau - 1.0;
    std::vector<double> w;
    for (const auto& a : atoms) {
        if (a.x < -1.0 - weight_tol || a.x > join + weight_tol || a.y < join - weight_tol ||
            a.y > 1.0 + weight_tol)
            throw out_of_domain("spec: atom outside the base set");
        w.push_back(a.weight);
    }
    check_weights(w);
}

cx szapiel_g(const szapiel_spec& spec, cx z) {
    spec.validate();
    if (!(std::abs(z) < 1.0)) throw out_of_domain("szapiel_g: z must be in the open disc");
    const cx zz = z * z;
    const cx front = (1.0 + z) * (1.0 + z);
    cx g = 0.0;
    for (const auto& a : spec.atoms) {
        const cx num = front * (1.0 - 2.0 * (1.0 - 2.0 * spec.tau + a.x + a.y) * z + zz);
        const cx den = (1.0 - 2.0 * a.x * z + zz) * (1.0 - 2.0 * a.y * z + zz);
        g += a.weight * num / den;
    }
    return g;
}

cx szapiel_eval(const szapiel_spec& spec, cx z) {
    if (z == cx{0.0, 0.0}) {
        spec.validate();
        return {0.0, 0.0};  // g(0) = 1 forces f(0) = 0
    }
    const cx g = szapiel_g(spec, z);
    try {
        return mobius(mobius_kind::sqrt_side, g);
    } catch (const branch_cut&) {
        // continue the root along the segment from near 0 (where g is near 1)
        const int n = 128;
        std::vector<cx> path(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            path[static_cast<size_t>(k)] = szapiel_g(spec, z * (0.01 + 0.99 * k / n));
        const cx root = branch_sqrt_path(path, std::sqrt(path.front())).back();
        return (root - 1.0) / (root + 1.0);
    }
}

double herglotz_spec::first_moment() const {
    double m = 0.0;
    for (const auto& a : atoms) m += a.weight * std::cos(a.u);
    return m;
}

void herglotz_spec::validate() const {
    if (atoms.empty()) throw out_of_domain("spec: needs at least one atom");
    const double pi = std::acos(-1.0);
    std::vector<double> w;
    for (const auto& a : atoms) {
        if (a.u < -weight_tol || a.u > pi + weight_tol)
            throw out_of_domain("spec: atom angle outside [0, pi]");
        w.push_back(a.weight);
    }
    check_weights(w);
    const double m1 = first_moment();
    if (constraint == herglotz_constraint::nonneg && m1 < -weight_tol)
        throw out_of_domain("spec: first moment must be nonnegative");
    if (constraint == herglotz_constraint::zero && std::abs(m1) > weight_tol)
        throw out_of_domain("spec: first moment must vanish");
}

std::pair<cx, cx> herglotz_eval(const herglotz_spec& spec, cx z) {
    spec.validate();
    if (!(std::abs(z) < 1.0)) throw out_of_domain("herglotz_eval: z must be in the open disc");
    const cx zz = z * z;
    cx g = 0.0;
    for (const auto& a : spec.atoms)
        g += a.weight * (1.0 - zz) / (1.0 - 2.0 * z * std::cos(a.u) + zz);
    return {g, (g - 1.0) / (g + 1.0)};
}

szapiel_spec sample_szapiel(double tau_min, double tau_max, int n_atoms, uint64_t seed) {
    if (!(tau_min >= 0.0) || !(tau_max > tau_min) || tau_max > 1.0)
        throw out_of_range("sample_szapiel: need 0 <= tau_min < tau_max <= 1");
    if (n_atoms < 1) throw out_of_range("sample_szapiel: need at least one atom");
    splitmix64 g(seed);
    szapiel_spec spec;
    spec.tau = tau_max - (tau_max - tau_min) * g.uniform01();  // in (tau_min, tau_max]
    const double join = 2.0 * spec.tau - 1.0;
    const auto weights = simplex_weights(g, n_atoms);
    for (int i = 0; i < n_atoms; ++i)
        spec.atoms.push_back({g.uniform(-1.0, join), g.uniform(join, 1.0),
                              weights[static_cast<size_t>(i)]});
    spec.validate();
    return spec;
}

herglotz_spec sample_herglotz(herglotz_constraint constraint, int n_atoms, uint64_t seed) {
    if (n_atoms < 1) throw out_of_range("sample_herglotz: need at least one atom");
    const double pi = std::acos(-1.0);
    splitmix64 g(seed);
    herglotz_spec spec;
    spec.constraint = constraint;

    if (constraint == herglotz_constraint::zero) {
        // each compensating pair has an exactly vanishing first moment; any
        // simplex mixture of such pairs keeps it zero
        const auto weights = simplex_weights(g, n_atoms);
        for (int i = 0; i < n_atoms; ++i) {
            const double phi = g.uniform(0.0, pi / 2.0);
            const double psi = pi / 2.0 + (pi / 2.0) * (1.0 - g.uniform01());  // in (pi/2, pi]
            const double cphi = std::cos(phi), cpsi = std::cos(psi);
            const double lambda = cpsi / (cpsi - cphi);  // solves lambda*cphi + (1-lambda)*cpsi = 0
            const double w = weights[static_cast<size_t>(i)];
            spec.atoms.push_back({phi, w * lambda});
            spec.atoms.push_back({psi, w * (1.0 - lambda)});
        }
        spec.validate();
        return spec;
    }

    const int budget = 100000;
    for (int attempt = 0; attempt < budget; ++attempt) {
        spec.atoms.clear();
        const auto weights = simplex_weights(g, n_atoms);
        for (int i = 0; i < n_atoms; ++i)
            spec.atoms.push_back({g.uniform(0.0, pi), weights[static_cast<size_t>(i)]});
        if (constraint == herglotz_constraint::none || spec.first_moment() >= 0.0) {
            spec.validate();
            return spec;
        }
    }
    throw rejection_budget_exceeded("sample_herglotz: rejection budget exhausted");
}

driving_spec sample_driving(int pieces, double value_range, uint64_t seed) {
    if (pieces < 1) throw out_of_range("sample_driving: need at least one piece");
    if (!(value_range > 0.0)) throw out_of_range("sample_driving: value range must be positive");
    splitmix64 g(seed);
    driving_spec spec;
    spec.kind = driving_spec::kind_t::measure_path;
    double t = 0.0;
    for (int i = 0; i < pieces; ++i) {
        measure_piece piece;
        piece.t_start = t;
        t += g.uniform(0.05, 0.35);
        piece.t_end = t;
        const int n = 1 + static_cast<int>(g.below(4));
        const auto weights = simplex_weights(g, n);
        for (int j = 0; j < n; ++j)
            piece.measure.atoms.push_back(
                {g.uniform(0.0, value_range), weights[static_cast<size_t>(j)]});
        spec.measure_pieces.push_back(std::move(piece));
    }
    spec.validate();
    return spec;
}

cx richardson_derivative(const std::function<cx(cx)>& f, cx z, double h) {
    const auto central = [&](double step) { return (f(z + step) - f(z - step)) / (2.0 * step); };
    const cx coarse = central(h);
    const cx fine = central(h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

cx f0_eval(cx z) {
    if (z == cx{0.0, 0.0}) return {0.0, 0.0};
    if (!(std::abs(z) < 1.0)) throw out_of_domain("f0_eval: z must be in the open disc");
    const cx zz = z * z;
    const cx g = (1.0 + z) * (1.0 + z) * (1.0 + zz) / (1.0 + zz + zz * zz);
    const cx root = std::sqrt(g);
    return (root - 1.0) / (root + 1.0);
}

f0_report f0_critical_check() {
    f0_report rep;
    const double s3 = std::sqrt(3.0);
    rep.z_star = cx{-0.25, s3 / 4.0} + 0.5 * std::sqrt(cx{-4.5, -s3 / 2.0});
    rep.z_star_abs = std::abs(rep.z_star);
    rep.deriv_at_z_star = std::abs(richardson_derivative(f0_eval, rep.z_star));
    rep.deriv0_error = std::abs(richardson_derivative(f0_eval, cx{0.0, 0.0}) - cx{0.5, 0.0});
    rep.pass = rep.z_star_abs < 1.0 && rep.deriv_at_z_star < 1e-6 && rep.deriv0_error < 1e-8;
    return rep;
}

}  // namespace vrkit
