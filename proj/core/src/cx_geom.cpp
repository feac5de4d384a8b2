#include "vrkit/cx_geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vrkit {

namespace {

bool finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double cross(cx a, cx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double dist_to_segment(cx a, cx b, cx w) {
    const cx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(w - a);
    double s = ((w.real() - a.real()) * ab.real() + (w.imag() - a.imag()) * ab.imag()) / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(w - (a + s * ab));
}

}  // namespace

circle_or_line circle_through(cx p, cx q, cx r) {
    if (!finite(p) || !finite(q) || !finite(r)) throw degenerate_input("circle_through: non-finite input");
    const double scale = std::max({1.0, std::abs(p), std::abs(q), std::abs(r)});
    const double coincide = 1e-15 * scale;
    if (std::abs(p - q) <= coincide || std::abs(q - r) <= coincide || std::abs(p - r) <= coincide)
        throw degenerate_input("circle_through: two points coincide");

    const double span = std::max({std::abs(q - p), std::abs(r - p), std::abs(r - q)});
    const double twice_area = cross(q - p, r - p);
    if (std::abs(twice_area) < 1e-12 * span * span) {
        return {.is_line = true, .as_circle = {}, .as_line = {p, (q - p) / std::abs(q - p)}};
    }

    const double a2 = std::norm(p), b2 = std::norm(q), c2 = std::norm(r);
    const double d = 2.0 * (p.real() * (q.imag() - r.imag()) + q.real() * (r.imag() - p.imag()) +
                            r.real() * (p.imag() - q.imag()));
    const cx center{(a2 * (q.imag() - r.imag()) + b2 * (r.imag() - p.imag()) + c2 * (p.imag() - q.imag())) / d,
                    (a2 * (r.real() - q.real()) + b2 * (p.real() - r.real()) + c2 * (q.real() - p.real())) / d};
    return {.is_line = false, .as_circle = {center, std::abs(center - p)}, .as_line = {}};
}

std::vector<cx> branch_sqrt_path(const std::vector<cx>& samples, cx initial_root) {
    if (samples.empty()) return {};
    if (!finite(initial_root)) throw branch_ambiguity("branch_sqrt_path: non-finite initial root");
    const double scale0 = std::max(1.0, std::abs(samples[0]));
    if (std::abs(initial_root * initial_root - samples[0]) > 1e-9 * scale0)
        throw branch_ambiguity("branch_sqrt_path: initial root does not square to the first sample");

    std::vector<cx> roots;
    roots.reserve(samples.size());
    roots.push_back(initial_root);
    for (size_t i = 1; i < samples.size(); ++i) {
        if (!finite(samples[i])) throw branch_ambiguity("branch_sqrt_path: non-finite sample");
        const cx s = std::sqrt(samples[i]);
        if (std::abs(s) == 0.0) throw branch_ambiguity("branch_sqrt_path: sample at 0, roots coincide");
        const cx prev = roots.back();
        const double keep = std::abs(s - prev);
        const double flip = std::abs(-s - prev);
        // candidates nearly equidistant: the step rotated the root by ~90 degrees or more
        if (std::min(keep, flip) > 0.9 * std::max(keep, flip))
            throw branch_ambiguity("branch_sqrt_path: step too coarse to disambiguate roots");
        roots.push_back(keep <= flip ? s : -s);
    }
    return roots;
}

double distance_to_polyline(const polyline& boundary, cx w) {
    const auto& v = boundary.vertices;
    if (v.size() < 2) throw malformed_boundary("distance_to_polyline: need at least 2 vertices");
    double best = std::numeric_limits<double>::infinity();
    const size_t n = v.size();
    const size_t edges = boundary.closed ? n : n - 1;
    for (size_t i = 0; i < edges; ++i) {
        best = std::min(best, dist_to_segment(v[i], v[(i + 1) % n], w));
    }
    return best;
}

containment winding_contains(const polyline& boundary, cx w, double tol) {
    const auto& v = boundary.vertices;
    if (v.size() < 3) throw malformed_boundary("winding_contains: closed boundary needs >= 3 vertices");
    for (size_t i = 0; i < v.size(); ++i) {
        if (!finite(v[i])) throw malformed_boundary("winding_contains: non-finite vertex");
        if (v[i] == v[(i + 1) % v.size()]) throw malformed_boundary("winding_contains: repeated consecutive vertex");
    }
    if (!finite(w)) throw malformed_boundary("winding_contains: non-finite query point");

    if (distance_to_polyline(boundary, w) <= std::max(tol, 0.0)) return containment::boundary;

    double total = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        const cx a = v[i] - w;
        const cx b = v[(i + 1) % v.size()] - w;
        total += std::arg(b / a);
    }
    const long k = std::lround(total / (2.0 * std::numbers::pi));
    if (k == 0) return containment::outside;
    if (k == 1 || k == -1) return containment::inside;
    throw malformed_boundary("winding_contains: |winding| > 1, boundary self-intersects");
}

cx mobius(mobius_kind kind, cx w) {
    switch (kind) {
        case mobius_kind::cayley:
            return (w - cx{0, 1}) / (w + cx{0, 1});
        case mobius_kind::inv_cayley:
            if (w == cx{1, 0}) throw pole_at_one("inv_cayley: pole at z = 1");
            return cx{0, 1} * (cx{1, 0} + w) / (cx{1, 0} - w);
        case mobius_kind::sqrt_side: {
            if (w.imag() == 0.0 && w.real() <= 0.0) throw branch_cut("sqrt_side: input on the cut (-inf, 0]");
            const cx s = std::sqrt(w);
            return (s - 1.0) / (s + 1.0);
        }
        case mobius_kind::square_side: {
            if (w == cx{1, 0}) throw pole_at_one("square_side: pole at z = 1");
            const cx n = 1.0 + w, d = 1.0 - w;
            return (n * n) / (d * d);
        }
    }
    throw out_of_range("mobius: unknown kind");
}

}  // namespace vrkit
