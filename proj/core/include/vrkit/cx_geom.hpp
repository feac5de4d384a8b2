#pragma once

#include <complex>
#include <vector>

#include "vrkit/errors.hpp"

namespace vrkit {

using cx = std::complex<double>;

// relative tolerance for algebraic identities throughout the library
inline constexpr double algebraic_tol = 1e-12;

struct circle {
    cx center;
    double radius = 0.0;
};

struct line {
    cx point;
    cx direction;  // unit modulus
};

struct circle_or_line {
    bool is_line = false;
    circle as_circle;  // valid when !is_line
    line as_line;      // valid when is_line
};

// circle (or line, if collinear within 1e-12 * scale^2) through three distinct points
circle_or_line circle_through(cx p, cx q, cx r);

// square roots continued along a sample path; initial_root pins the branch at samples[0]
std::vector<cx> branch_sqrt_path(const std::vector<cx>& samples, cx initial_root);

struct polyline {
    std::vector<cx> vertices;  // closed implicitly: last connects back to first
    bool closed = true;
};

enum class containment { inside, boundary, outside };

// smallest distance from w to the (closed) polyline
double distance_to_polyline(const polyline& boundary, cx w);

// membership by winding number; `boundary` verdict within distance tol of the polyline
containment winding_contains(const polyline& boundary, cx w, double tol);

enum class mobius_kind {
    cayley,       // upper half-plane -> unit disc, w -> (w - i)/(w + i)
    inv_cayley,   // unit disc -> upper half-plane, z -> i(1 + z)/(1 - z)
    sqrt_side,    // w -> (sqrt(w) - 1)/(sqrt(w) + 1), principal branch, sqrt(1) = 1
    square_side,  // z -> (1 + z)^2/(1 - z)^2, inverse of sqrt_side
};

cx mobius(mobius_kind kind, cx w);

}  // namespace vrkit
