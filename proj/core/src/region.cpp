#include "vrkit/region.hpp"

#include <cmath>
#include <numbers>

namespace vrkit {

polyline boundary_polyline(const region_spec& spec) {
    polyline poly;
    for (const auto& e : spec.edges) {
        for (const auto& p : e.points) {
            if (poly.vertices.empty() || std::abs(p - poly.vertices.back()) > 0.0)
                poly.vertices.push_back(p);
        }
    }
    if (poly.vertices.size() > 1 && poly.vertices.front() == poly.vertices.back())
        poly.vertices.pop_back();
    return poly;
}

namespace {

void subdivide(const std::function<cx(double)>& f, double a, cx fa, double b, cx fb,
               double sag_tol, int depth, std::vector<std::pair<double, cx>>& out) {
    const double m = 0.5 * (a + b);
    const cx fm = f(m);
    const double sag = std::abs(fm - 0.5 * (fa + fb));
    if (depth > 0 && sag > sag_tol) {
        subdivide(f, a, fa, m, fm, sag_tol, depth - 1, out);
        out.emplace_back(m, fm);
        subdivide(f, m, fm, b, fb, sag_tol, depth - 1, out);
    }
}

}  // namespace

std::vector<std::pair<double, cx>> sample_adaptive(const std::function<cx(double)>& f, double a,
                                                   double b, int initial, double sag_tol) {
    if (initial < 1) initial = 1;
    std::vector<std::pair<double, cx>> out;
    std::vector<std::pair<double, cx>> grid;
    grid.reserve(static_cast<size_t>(initial) + 1);
    for (int i = 0; i <= initial; ++i) {
        const double s = a + (b - a) * static_cast<double>(i) / initial;
        grid.emplace_back(s, f(s));
    }
    for (int i = 0; i < initial; ++i) {
        out.push_back(grid[static_cast<size_t>(i)]);
        subdivide(f, grid[static_cast<size_t>(i)].first, grid[static_cast<size_t>(i)].second,
                  grid[static_cast<size_t>(i) + 1].first, grid[static_cast<size_t>(i) + 1].second,
                  sag_tol, 12, out);
    }
    out.push_back(grid.back());
    return out;
}

std::vector<cx> arc_points(cx from, cx via, cx to, int n) {
    if (n < 1) n = 1;
    std::vector<cx> pts;
    pts.reserve(static_cast<size_t>(n) + 1);

    circle_or_line fit;
    try {
        fit = circle_through(from, via, to);
    } catch (const degenerate_input&) {
        fit.is_line = true;  // endpoints nearly coincident: fall back to the chord
    }
    if (fit.is_line) {
        for (int i = 0; i <= n; ++i)
            pts.push_back(from + (to - from) * (static_cast<double>(i) / n));
        return pts;
    }

    const cx c = fit.as_circle.center;
    const double r = fit.as_circle.radius;
    const double a0 = std::arg(from - c);
    const double a1 = std::arg(to - c);
    const double am = std::arg(via - c);
    const double two_pi = 2.0 * std::numbers::pi;
    auto ccw = [&](double lo, double hi) { return std::fmod(hi - lo + two_pi * 2, two_pi); };
    double sweep = ccw(a0, a1);
    if (ccw(a0, am) > sweep) sweep -= two_pi;  // go the other way so the arc passes `via`

    for (int i = 0; i <= n; ++i) {
        const double th = a0 + sweep * static_cast<double>(i) / n;
        pts.push_back(c + std::polar(r, th));
    }
    pts.front() = from;
    pts.back() = to;
    return pts;
}

}  // namespace vrkit
