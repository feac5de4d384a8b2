#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vrkit/cx_geom.hpp"

namespace vrkit {

// where a classified point sits relative to a region
enum class locus {
    interior,     // strictly inside
    on_boundary,  // on an included boundary piece
    at_z0,        // at the distinguished base point (always a member)
    on_excluded,  // on an excluded boundary piece or excluded point (never a member)
    outside,
};

struct verdict {
    bool member = false;
    locus where = locus::outside;
    std::string edge;  // tag of the boundary piece when where is on_boundary / on_excluded
};

// one discretized boundary piece, stitched tip-to-tail with its neighbours
struct region_edge {
    std::string name;
    std::vector<cx> points;
    bool included = true;
};

// exportable region description: boundary polylines with inclusion flags, or a
// degenerate form (interval on the real axis / ray or vertical segment / single point)
struct region_spec {
    std::string kind;
    cx z0;
    double tau = 0.0;  // derivative-at-0 level for kind == "VT"

    std::vector<region_edge> edges;
    std::vector<cx> excluded_points;

    bool degenerate = false;     // region is a 1-dimensional set, `edges` empty
    bool point_region = false;   // region is the single point z0
    cx interval_a, interval_b;   // endpoints of the degenerate interval/segment
    bool a_included = true, b_included = true;
};

// concatenated boundary of all edges as one closed polyline (consecutive duplicates dropped)
polyline boundary_polyline(const region_spec& spec);

// curve discretization helpers ------------------------------------------------

// adaptive polyline of f over [a, b]: splits until the chord midpoint deviation
// drops below sag_tol (absolute); returns parameter/value pairs in order
std::vector<std::pair<double, cx>> sample_adaptive(const std::function<cx(double)>& f, double a,
                                                   double b, int initial, double sag_tol);

// n + 1 points of the circular arc from `from` to `to` on the circle fit through
// `via`; sampling is uniform in angle so flat arcs do not sag
std::vector<cx> arc_points(cx from, cx via, cx to, int n);

}  // namespace vrkit
